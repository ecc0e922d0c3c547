#include <doctest.h>

#include "latw/constructions.hpp"
#include "latw/named.hpp"
#include "latw/triples.hpp"
#include "oracles.hpp"

using namespace latw;

namespace {

// Boolean triples straight from (F), no shared code.
std::vector<Triple> brute_triples(const Lattice& l) {
  std::vector<Triple> out;
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto j = [&](int p, int q) { return l.join(p, q); };
        auto m = [&](int p, int q) { return l.meet(p, q); };
        if (m(j(x, y), j(x, z)) == x && m(j(y, x), j(y, z)) == y && m(j(z, x), j(z, y)) == z)
          out.push_back({x, y, z});
      }
  return out;
}

bool leq3(const Lattice& l, const Triple& s, const Triple& t) {
  return l.leq(s[0], t[0]) && l.leq(s[1], t[1]) && l.leq(s[2], t[2]);
}

}  // namespace

TEST_CASE("M3[C2] is M3 and M3[C3] has 12 elements") {
  Triples t2 = boolean_triples(named::chain(2));
  CHECK(t2.lattice.size() == 5);
  CHECK(oracle::lattice_isomorphic(t2.lattice, named::m3()));
  CHECK(brute_triples(named::chain(2)).size() == 5);
  Triples t3 = boolean_triples(named::chain(3));
  CHECK(t3.lattice.size() == 12);
  CHECK(brute_triples(named::chain(3)).size() == 12);
}

TEST_CASE("triples are exactly the (F)-triples, all balanced") {
  for (const auto& name : {"N5", "M3", "B2", "C4", "S7", "N6"}) {
    Lattice l = named::by_name(name);
    Triples t = boolean_triples(l);
    CHECK(t.triples == brute_triples(l));
    for (const auto& x : t.triples) CHECK(is_balanced(l, x));
  }
}

TEST_CASE("closure is extensive, idempotent, monotone and least") {
  for (const auto& name : {"N5", "M3", "C3", "B2"}) {
    Lattice l = named::by_name(name);
    auto bt = brute_triples(l);
    const int n = int(l.size());
    std::vector<Triple> all;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) all.push_back({x, y, z});
    for (const auto& t : all) {
      Triple c = triple_closure(l, t);
      CHECK(is_boolean_triple(l, c));
      CHECK(leq3(l, t, c));
      CHECK(triple_closure(l, c) == c);
      for (const auto& b : bt)
        if (leq3(l, t, b)) CHECK(leq3(l, c, b));
    }
    for (const auto& s : all)
      for (const auto& t : all)
        if (leq3(l, s, t)) CHECK(leq3(l, triple_closure(l, s), triple_closure(l, t)));
  }
}

TEST_CASE("lattice operations are the componentwise meet and the closed join") {
  for (const auto& name : {"N5", "S7", "C3"}) {
    Lattice l = named::by_name(name);
    Triples t = boolean_triples(l);
    for (int a = 0; a < int(t.lattice.size()); ++a)
      for (int b = 0; b < int(t.lattice.size()); ++b) {
        CHECK(t.triples[t.lattice.join(a, b)] == triple_join(l, t.triples[a], t.triples[b]));
        CHECK(t.triples[t.lattice.meet(a, b)] == triple_meet(l, t.triples[a], t.triples[b]));
      }
  }
}

TEST_CASE("M3[L] has a spanning M3 and gamma is an embedding") {
  Lattice l = named::n5();
  Triples t = boolean_triples(l);
  const int o = l.zero(), i = l.one();
  std::vector<int> span = {t.index_of({o, o, o}), t.index_of({i, o, o}), t.index_of({o, i, o}),
                           t.index_of({o, o, i}), t.index_of({i, i, i})};
  CHECK(t.lattice.closed(span));
  CHECK(oracle::lattice_isomorphic(t.lattice.sublattice(span), named::m3()));
  CHECK(is_lattice_isomorphism(l, t.lattice.sublattice(t.gamma), [&] {
    std::vector<int> id(l.size());
    for (int x = 0; x < int(l.size()); ++x) id[x] = x;
    return id;
  }()));
}

TEST_CASE("M3 of a product is the product of the M3's") {
  Lattice c2 = named::chain(2);
  Product p = direct_product(c2, c2);
  Triples t = boolean_triples(p.lattice);
  Product q = direct_product(boolean_triples(c2).lattice, boolean_triples(c2).lattice);
  CHECK(t.lattice.size() == 25);
  CHECK(are_isomorphic(t.lattice.poset(), q.lattice.poset()).has_value());
}

TEST_CASE("M3[L] is a congruence-preserving extension of gamma L") {
  for (const auto& name : {"C3", "N5", "M3", "B2", "N6"}) {
    Lattice l = named::by_name(name);
    Triples t = boolean_triples(l);
    CHECK(extension_class(t.lattice, t.gamma).preserving);
    auto cl = con_lattice(l), ct = con_lattice(t.lattice);
    CHECK(cl.size() == ct.size());
    for (const auto& a : cl.congruences) CHECK(is_congruence(t.lattice, triple_congruence(l, t, a)));
  }
}

TEST_CASE("distributive L: (B) iff (F) and M3[L] is modular") {
  for (const auto& name : {"C3", "C4", "B2", "grid2x3", "B3"}) {
    Lattice l = named::by_name(name);
    const int n = int(l.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) CHECK(is_balanced(l, {x, y, z}) == is_boolean_triple(l, {x, y, z}));
    CHECK(is_modular(boolean_triples(l).lattice));
  }
  // the three atoms of M3 are balanced but not Boolean
  Lattice m3 = named::m3();
  Triple abc{m3.at("a"), m3.at("b"), m3.at("c")};
  CHECK(is_balanced(m3, abc));
  CHECK(!is_boolean_triple(m3, abc));
}

TEST_CASE("M3[L,a]: elements, embedding and decomposition") {
  Lattice l = named::n5();
  for (int a = 0; a < int(l.size()); ++a) {
    TripleInterval t = boolean_triples_interval(l, a);
    CHECK(t.b == l.one());
    for (const auto& v : t.triples) {
      CHECK(l.leq(a, v[1]));
      CHECK(l.meet(v[0], a) == l.meet(v[2], a));
    }
    for (int w = 0; w < int(t.lattice.size()); ++w) {
      const auto& v = t.triples[w];
      CHECK(t.triples[t.parts[w][0]] == Triple{v[0], a, l.meet(v[0], a)});
      CHECK(t.triples[t.parts[w][1]] == Triple{l.zero(), v[1], l.zero()});
      CHECK(t.triples[t.parts[w][2]] == Triple{l.meet(v[2], a), a, v[2]});
    }
    CHECK(extension_class(t.lattice, t.gamma).preserving);
    // every congruence is α³ restricted, for a unique α
    auto cl = con_lattice(l).congruences;
    std::vector<Congruence> made;
    for (const auto& al : cl) made.push_back(triple_congruence(l, t, al));
    std::sort(made.begin(), made.end());
    CHECK(std::adjacent_find(made.begin(), made.end()) == made.end());
    CHECK(made == con_lattice(t.lattice).congruences);
  }
}

TEST_CASE("M3[L,a,b]: package, ideal and filter") {
  Lattice l = named::chain(5);
  TripleInterval t = boolean_triples_interval(l, 1, 3);
  const Lattice& m = t.lattice;
  CHECK(m.meet(t.u, t.v) == t.zero);
  CHECK(m.join(t.u, t.v) == t.one);
  CHECK(oracle::lattice_isomorphic(m.sublattice(t.ideal_i), l.interval_lattice(1, 3)));
  CHECK(oracle::lattice_isomorphic(m.sublattice(t.filter_f), l));
  std::vector<int> f_sorted = t.f_of;
  std::sort(f_sorted.begin(), f_sorted.end());
  CHECK(f_sorted == t.filter_f);
  CHECK(extension_class(m, t.gamma).preserving);
  CHECK(extension_class(m, t.f_of).preserving);
  for (const auto& a : con_lattice(l).congruences) CHECK(synchronized(l, t, a));
  CHECK_THROWS_AS(boolean_triples_interval(l, 3, 3), OrderError);
  CHECK_THROWS_AS(boolean_triples_interval(l, 3, 1), OrderError);
}

TEST_CASE("synchronization over every a < b of small lattices") {
  for (const auto& name : {"N5", "M3", "B2", "C4"}) {
    Lattice l = named::by_name(name);
    auto cl = con_lattice(l).congruences;
    for (int a = 0; a < int(l.size()); ++a)
      for (int b = 0; b < int(l.size()); ++b) {
        if (!l.lt(a, b)) continue;
        TripleInterval t = boolean_triples_interval(l, a, b);
        for (const auto& al : cl) CHECK(synchronized(l, t, al));
      }
  }
}
