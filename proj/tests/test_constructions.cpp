#include <doctest.h>

#include <set>

#include "latw/chopped.hpp"
#include "latw/constructions.hpp"
#include "latw/named.hpp"
#include "oracles.hpp"

using namespace latw;

namespace {

// Partitions of a chopped lattice with SP∧ and SP∨ (when both joins exist),
// straight from the definitions.
std::vector<Congruence> brute_chopped_congruences(const ChoppedLattice& m) {
  const int n = int(m.size());
  std::vector<Congruence> out;
  oracle::for_each_partition(n, [&](const std::vector<int>& s) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (s[a] != s[b]) continue;
        for (int c = 0; c < n; ++c) {
          if (s[m.meet(a, c)] != s[m.meet(b, c)]) return;
          int u = m.join(a, c), v = m.join(b, c);
          if (u >= 0 && v >= 0 && s[u] != s[v]) return;
        }
      }
    out.emplace_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Merge> sample_merges() {
  std::vector<Merge> out;
  Lattice c2 = named::chain(2), c3 = named::chain(3), b2 = named::boolean(2);
  Lattice n5 = named::n5(), n6 = named::n6(), m3 = named::m3();
  out.push_back(merge(c2, c2, {{0, 0}}));
  out.push_back(merge(c3, c3, {{0, 0}, {1, 1}}));
  out.push_back(merge(b2, b2, {{0, 0}, {1, 1}}));
  out.push_back(atom_merge(n5, n5.at("a"), n5, n5.at("c")));
  out.push_back(atom_merge(n6, n6.at("q1"), n6, n6.at("p")));
  out.push_back(atom_merge(m3, m3.at("a"), b2, 1));
  out.push_back(atom_merge(n5, n5.at("c"), m3, m3.at("b")));
  out.push_back(merge(n5, n5, {{n5.at("o"), n5.at("o")}, {n5.at("a"), n5.at("a")}, {n5.at("b"), n5.at("b")}}));
  out.push_back(merge({c2, c2, c2}, {{0, 1}, {0, 2}, {0, 3}}));
  out.push_back(merge({n6, c3, b2}, {{0, 1, 2, 3, 4, 5}, {0, 1, 6}, {0, 2, 7, 8}}));
  out.push_back(sc_counterexample());
  return out;
}

}  // namespace

TEST_CASE("product of C2 and N5") {
  Product p = direct_product(named::chain(2), named::n5());
  CHECK(p.lattice.size() == 10);
  CHECK(con_lattice(p.lattice).size() == 10);
  CHECK(oracle::all_congruences(p.lattice).size() == 10);
  for (int x = 0; x < 10; ++x) CHECK(p.at(p.coords(x)) == x);
  CHECK(p.lattice.name(p.at({1, 2})) == "(1,b)");
}

TEST_CASE("product order and operations are componentwise") {
  Lattice l = named::n5(), k = named::s7();
  Product p = direct_product(l, k);
  for (int x = 0; x < int(p.lattice.size()); ++x)
    for (int y = 0; y < int(p.lattice.size()); ++y) {
      auto cx = p.coords(x), cy = p.coords(y);
      CHECK(p.lattice.leq(x, y) == (l.leq(cx[0], cy[0]) && k.leq(cx[1], cy[1])));
      CHECK(p.lattice.join(x, y) == p.at({l.join(cx[0], cy[0]), k.join(cx[1], cy[1])}));
    }
}

TEST_CASE("congruences of a product are products of congruences") {
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"C2", "N5"}, {"N5", "M3"}, {"C3", "S7"}}) {
    Lattice l = named::by_name(a), k = named::by_name(b);
    Product p = direct_product(l, k);
    auto cl = con_lattice(l), ck = con_lattice(k), cp = con_lattice(p.lattice);
    CHECK(cp.size() == cl.size() * ck.size());
    std::set<Congruence> made;
    for (const auto& x : cl.congruences)
      for (const auto& y : ck.congruences) {
        Congruence g = product_congruence(p, {x, y});
        CHECK(is_congruence(p.lattice, g));
        auto back = split_congruence(p, g);
        CHECK(back[0] == x);
        CHECK(back[1] == y);
        made.insert(g);
      }
    CHECK(made.size() == cp.size());
  }
}

TEST_CASE("split rejects a non-product partition") {
  Product p = direct_product(named::chain(2), named::chain(2));
  // collapse (0,0) with (1,1) only: not a product of factor partitions
  std::vector<int> s = {0, 1, 2, 0};
  CHECK_THROWS_AS(split_congruence(p, Congruence(s)), OrderError);
}

TEST_CASE("ordinal and glued sums") {
  Lattice c2 = named::chain(2);
  CHECK(oracle::lattice_isomorphic(glued_sum(c2, c2), named::chain(3)));
  CHECK(oracle::lattice_isomorphic(ordinal_sum(c2, c2), named::chain(4)));
  Lattice b2 = named::boolean(2);
  Lattice g = glued_sum(b2, b2);
  CHECK(g.size() == 7);
  CHECK(is_distributive(g));
  CHECK(con_lattice(g).size() == 16);
  CHECK(ordinal_sum(b2, b2).size() == 8);
  CHECK_THROWS_AS(glued_sum(antichain_poset(2), chain_poset(2)), OrderError);
}

TEST_CASE("gluing two squares gives C2 x C3") {
  Lattice b2 = named::boolean(2);
  // filter [1, 3] of K, ideal [0, 2] of L
  Gluing g = glue(b2, b2, {1, 3}, {0, 2});
  CHECK(g.lattice.size() == 6);
  CHECK(oracle::lattice_isomorphic(g.lattice, named::grid(2, 3)));
  CHECK(g.from_k == std::vector<int>{0, 1, 2, 3});
  CHECK(g.from_l[0] == 1);
  CHECK(g.from_l[2] == 3);
}

TEST_CASE("glued congruences are exactly the agreeing pairs") {
  struct Case {
    Lattice k, l;
    std::vector<int> filter, phi;
  };
  Lattice n5 = named::n5(), b2 = named::boolean(2), m3 = named::m3(), c3 = named::chain(3);
  std::vector<Case> cases = {
      {b2, b2, {1, 3}, {0, 2}},
      {n5, b2, {n5.at("c"), n5.at("i")}, {0, 1}},
      {m3, n5, {m3.at("b"), m3.at("i")}, {n5.at("o"), n5.at("c")}},
      {c3, m3, {2}, {0}},
      {b2, named::boolean(3), {0, 1, 2, 3}, {0, 1, 2, 3}},
  };
  for (const auto& c : cases) {
    Gluing g = glue(c.k, c.l, c.filter, c.phi);
    auto ck = con_lattice(c.k).congruences, cl = con_lattice(c.l).congruences;
    std::set<Congruence> made;
    for (const auto& ak : ck)
      for (const auto& al : cl) {
        bool agree = true;
        for (std::size_t i = 0; i < c.filter.size(); ++i)
          for (std::size_t j = 0; j < c.filter.size(); ++j)
            agree = agree && ak.related(c.filter[i], c.filter[j]) == al.related(c.phi[i], c.phi[j]);
        if (!agree) {
          CHECK_THROWS_AS(glue_congruence(g, c.k, c.l, ak, al), OrderError);
          continue;
        }
        Congruence a = glue_congruence(g, c.k, c.l, ak, al);
        CHECK(oracle::sp_holds(g.lattice, a.signature()));
        auto [bk, bl] = split_glued_congruence(g, a);
        CHECK(bk == ak);
        CHECK(bl == al);
        made.insert(a);
      }
    auto all = oracle::all_congruences(g.lattice);
    CHECK(made == std::set<Congruence>(all.begin(), all.end()));
  }
}

TEST_CASE("gluing preserves modularity and distributivity") {
  Lattice m3 = named::m3(), b2 = named::boolean(2), c3 = named::chain(3);
  CHECK(is_modular(glue(m3, m3, {m3.at("a"), m3.at("i")}, {m3.at("o"), m3.at("b")}).lattice));
  CHECK(is_distributive(glue(b2, c3, {2, 3}, {0, 1}).lattice));
  Gluing g = glue(named::n5(), b2, {4}, {0});
  CHECK(!is_modular(g.lattice));
}

TEST_CASE("gluing rejects a bad filter or map") {
  Lattice b2 = named::boolean(2);
  CHECK_THROWS_AS(glue(b2, b2, {1, 2}, {0, 1}), OrderError);  // not a filter
  CHECK_THROWS_AS(glue(b2, b2, {1, 3}, {0, 3}), OrderError);  // not an ideal
  CHECK_THROWS_AS(glue(b2, b2, {1, 3}, {2, 0}), OrderError);  // not order-preserving
}

TEST_CASE("merge validates the shared part") {
  Lattice c3 = named::chain(3), b2 = named::boolean(2);
  // sharing the top of one piece with a middle element of the other is fine,
  // sharing a non-ideal is not
  CHECK_NOTHROW(merge(c3, b2, {{0, 0}, {1, 1}}));
  CHECK_THROWS_AS(merge(c3, b2, {{0, 0}, {2, 3}}), OrderError);
  CHECK_THROWS_AS(merge(c3, b2, {{1, 0}, {0, 1}}), OrderError);
}

TEST_CASE("chopped lattice basics") {
  Merge mg = merge(named::chain(2), named::chain(2), {{0, 0}});
  const auto& m = mg.chopped;
  CHECK(m.size() == 3);
  CHECK(m.max_elements().size() == 2);
  CHECK(m.join(1, 2) == -1);
  CHECK(m.meet(1, 2) == 0);
  IdealLattice id = ideal_lattice(m);
  CHECK(oracle::lattice_isomorphic(id.lattice, named::boolean(2)));
}

TEST_CASE("a poset missing a meet is not chopped") {
  // two minimal elements
  CHECK_THROWS(ChoppedLattice::from_poset(antichain_poset(2)));
  // 0 < a,b < c,d: a and b have no meet-trouble but c,d have two lower bounds a,b
  Poset p = Poset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
  CHECK_THROWS(ChoppedLattice::from_poset(p));
}

TEST_CASE("compatible vectors and ideals correspond") {
  for (const auto& mg : sample_merges()) {
    const auto& m = mg.chopped;
    IdealLattice id = ideal_lattice(m);
    // oracle: ideals as subsets
    std::vector<Bits> ideals;
    if (m.size() <= 16)
      for (unsigned long mask = 1; mask < (1ul << m.size()); ++mask) {
        Bits s(m.size(), mask);
        if (is_ideal(m, s)) ideals.push_back(s);
      }
    if (m.size() <= 16) CHECK(ideals.size() == id.vectors.size());
    for (std::size_t i = 0; i < id.vectors.size(); ++i) {
      const auto& v = id.vectors[i];
      CHECK(is_compatible(m, v));
      Bits s = ideal_of_vector(m, v);
      CHECK(is_ideal(m, s));
      CHECK(vector_of_ideal(m, s) == v);
    }
    for (int x = 0; x < int(m.size()); ++x) CHECK(id.embed[x] >= 0);
  }
}

TEST_CASE("compatible closure is the least compatible vector above") {
  for (const auto& mg : sample_merges()) {
    const auto& m = mg.chopped;
    IdealLattice id = ideal_lattice(m);
    const auto& mx = m.max_elements();
    std::vector<int> v(mx.size());
    // every vector with v_i <= m_i
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == mx.size()) {
        auto c = compatible_closure(m, v);
        CHECK(is_compatible(m, c));
        for (const auto& w : id.vectors) {
          bool above = true, above_c = true;
          for (std::size_t k = 0; k < mx.size(); ++k) {
            above = above && m.leq(v[k], w[k]);
            above_c = above_c && m.leq(c[k], w[k]);
          }
          CHECK(above == above_c);
        }
        return;
      }
      for (int x : m.piece_elements(i)) {
        v[i] = x;
        rec(i + 1);
      }
    };
    if (m.size() <= 12) rec(0);
  }
}

TEST_CASE("ideal join by iteration matches the join in Id M") {
  for (const auto& mg : sample_merges()) {
    const auto& m = mg.chopped;
    IdealLattice id = ideal_lattice(m);
    const int n = int(id.vectors.size());
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Bits u = ideal_join_by_iteration(m, ideal_of_vector(m, id.vectors[a]), ideal_of_vector(m, id.vectors[b]));
        CHECK(u == ideal_of_vector(m, id.vectors[id.lattice.join(a, b)]));
      }
  }
}

TEST_CASE("chopped congruences match brute force") {
  for (const auto& mg : sample_merges()) {
    const auto& m = mg.chopped;
    if (m.size() > 10) continue;
    auto cc = chopped_congruences(m);
    CHECK(cc.congruences == brute_chopped_congruences(m));
    for (std::size_t i = 0; i < cc.size(); ++i) {
      CHECK(is_chopped_congruence(m, cc.congruences[i]));
      CHECK(restriction_vector(m, cc.congruences[i]) == cc.vectors[i]);
    }
  }
}

TEST_CASE("Con M is isomorphic to Con Id M via the ideal extension") {
  for (const auto& mg : sample_merges()) {
    const auto& m = mg.chopped;
    IdealLattice id = ideal_lattice(m);
    auto cm = chopped_congruences(m).congruences;
    auto cid = con_lattice(id.lattice);
    std::set<Congruence> images;
    for (const auto& a : cm) {
      Congruence ext = ideal_extension(m, id, a);
      CHECK(is_congruence(id.lattice, ext));
      // restricted to the principal ideals, ᾱ gives back α
      for (int x = 0; x < int(m.size()); ++x)
        for (int y = 0; y < int(m.size()); ++y) CHECK(ext.related(id.embed[x], id.embed[y]) == a.related(x, y));
      images.insert(ext);
    }
    CHECK(images.size() == cm.size());
    CHECK(images == std::set<Congruence>(cid.congruences.begin(), cid.congruences.end()));
    // order is preserved both ways
    for (const auto& a : cm)
      for (const auto& b : cm)
        CHECK(a.refines(b) == ideal_extension(m, id, a).refines(ideal_extension(m, id, b)));
  }
}

TEST_CASE("atom merge: congruences are the pairs agreeing on the shared atom") {
  Lattice n5 = named::n5(), m3 = named::m3();
  Merge mg = atom_merge(n5, n5.at("c"), m3, m3.at("a"));
  auto cc = chopped_congruences(mg.chopped);
  std::size_t agreeing = 0;
  for (const auto& x : con_lattice(n5).congruences)
    for (const auto& y : con_lattice(m3).congruences)
      agreeing += x.related(n5.zero(), n5.at("c")) == y.related(m3.zero(), m3.at("a"));
  CHECK(cc.size() == agreeing);
}

TEST_CASE("two simple pieces over a shared atom: the only congruences are 0 and 1") {
  Lattice m3 = named::m3();
  Merge mg = atom_merge(m3, m3.at("a"), m3, m3.at("b"));
  auto cc = chopped_congruences(mg.chopped);
  REQUIRE(cc.size() == 2);
  CHECK(cc.congruences[0].is_one());
  CHECK(cc.congruences[1].is_zero());
  CHECK(subdirect(ideal_lattice(mg.chopped).lattice).simple);
}

TEST_CASE("sectionally complemented pieces, Id M not sectionally complemented") {
  Merge mg = sc_counterexample();
  const auto& m = mg.chopped;
  CHECK(m.size() == 16);
  REQUIRE(m.max_elements().size() == 2);
  CHECK(is_sectionally_complemented(m.piece(0)));
  CHECK(is_sectionally_complemented(m.piece(1)));
  Lattice l1 = m.piece(0), l2 = m.piece(1);
  CHECK(irreducibles(l1).meet_irreducibles.end() !=
        std::find(irreducibles(l1).meet_irreducibles.begin(), irreducibles(l1).meet_irreducibles.end(), l1.at("q")));
  CHECK(irreducibles(l2).meet_irreducibles.end() !=
        std::find(irreducibles(l2).meet_irreducibles.begin(), irreducibles(l2).meet_irreducibles.end(), l2.at("p")));
  IdealLattice id = ideal_lattice(m);
  CHECK(!is_sectionally_complemented(id.lattice));
  int ab = id.index_of({m.at("a"), m.at("b")});
  REQUIRE(ab >= 0);
  CHECK(!complement_in(id.lattice, ab, id.lattice.zero(), id.lattice.one()));
}
