#include <doctest.h>

#include <set>

#include "latw/named.hpp"
#include "oracles.hpp"

using namespace latw;

namespace {

std::vector<Lattice> upto(std::size_t n) {
  std::vector<Lattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& l : enumerate_lattices(k)) out.push_back(std::move(l));
  return out;
}

bool distributive_by_identity(const Lattice& l) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

}  // namespace

TEST_CASE("lattice from poset") {
  Lattice b2 = named::boolean(2);
  CHECK(b2.join(1, 2) == b2.one());
  CHECK_THROWS_AS(Lattice::from_poset(antichain_poset(2)), NotALattice);
  try {
    Lattice::from_poset(antichain_poset(2));
  } catch (const NotALattice& e) {
    CHECK(((e.a == 0 && e.b == 1) || (e.a == 1 && e.b == 0)));
  }
  Lattice m3 = named::m3();
  for (const char* a : {"a", "b", "c"})
    for (const char* b : {"a", "b", "c"})
      if (std::string(a) != b) CHECK(m3.meet(m3.at(a), m3.at(b)) == m3.at("o"));
}

TEST_CASE("tables are bounds and satisfy the lattice identities") {
  for (const auto& l : upto(6)) {
    auto r = oracle::leq_table(l.poset());
    const int n = int(l.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(l.join(a, b) == *oracle::lub(r, a, b));
        CHECK((l.leq(a, b) == (l.join(a, b) == b)));
        CHECK((l.leq(a, b) == (l.meet(a, b) == a)));
        CHECK(l.join(a, b) == l.join(b, a));
        CHECK(l.join(a, l.meet(a, b)) == a);
        CHECK(l.meet(a, l.join(a, b)) == a);
        for (int c = 0; c < n; ++c) {
          CHECK(l.join(a, l.join(b, c)) == l.join(l.join(a, b), c));
          CHECK(l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c));
        }
      }
    CHECK(l.join(l.zero(), l.one()) == l.one());
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(enumerate_lattices(n).size() == expected[n - 1]);
  // independent generator: all bounded posets, filtered and deduplicated by brute force
  for (int n = 1; n <= 6; ++n) CHECK(oracle::count_lattices(n) == enumerate_lattices(n).size());
  CHECK_THROWS_AS(enumerate_lattices(9), OrderError);
}

TEST_CASE("enumerated lattices are pairwise non-isomorphic and deterministic") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto ls = enumerate_lattices(n);
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) CHECK_FALSE(oracle::lattice_isomorphic(ls[i], ls[j]));
  }
  auto a = enumerate_lattices(7), b = enumerate_lattices(7);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].poset() == b[i].poset());
}

TEST_CASE("irreducibles") {
  auto b3 = irreducibles(named::boolean(3));
  CHECK(b3.join_irreducibles == std::vector<int>{1, 2, 4});
  CHECK(b3.atoms == std::vector<int>{1, 2, 4});
  for (std::size_t n = 2; n <= 6; ++n) CHECK(irreducibles(named::chain(n)).join_irreducibles.size() == n - 1);
  Lattice n5 = named::n5();
  auto r = irreducibles(n5);
  CHECK(r.join_irreducibles == std::vector<int>{n5.at("a"), n5.at("b"), n5.at("c")});
  CHECK(r.lower_cover_of_ji.at(n5.at("b")) == n5.at("a"));
  for (const auto& l : upto(7)) {
    auto e = irreducibles(l);
    for (int a = 0; a < int(l.size()); ++a) {
      bool ji = a != l.zero() && l.poset().lower_covers(a).size() == 1;
      CHECK(std::count(e.join_irreducibles.begin(), e.join_irreducibles.end(), a) == int(ji));
    }
    CHECK(std::count(e.meet_irreducibles.begin(), e.meet_irreducibles.end(), l.one()) == 0);
  }
}

TEST_CASE("classification of named lattices") {
  auto m3 = classify(named::m3());
  CHECK(m3.modular);
  CHECK_FALSE(m3.distributive);
  auto s8 = classify(named::s8());
  CHECK(s8.upper_semimodular);
  CHECK_FALSE(s8.modular);
  CHECK(named::s8().size() == 8);
  auto n6 = classify(named::n6());
  CHECK(n6.sectionally_complemented);
  CHECK_FALSE(n6.relatively_complemented);
  auto n5 = classify(named::n5());
  CHECK(n5.complemented);
  CHECK_FALSE(n5.relatively_complemented);
  CHECK(classify(named::s7()).upper_semimodular);
  CHECK_FALSE(classify(named::s7()).modular);
  CHECK(classify(named::boolean(3)).distributive);
  CHECK(classify(named::boolean(3)).atomistic);
  CHECK(classify(named::grid(3, 4)).distributive);
}

TEST_CASE("class implications and the forbidden sublattice cross-check") {
  for (const auto& l : upto(7)) {
    auto c = classify(l);
    if (c.distributive) CHECK(c.modular);
    if (c.modular) CHECK((c.upper_semimodular && c.lower_semimodular));
    CHECK(c.distributive == distributive_by_identity(l));
    auto n5 = find_forbidden_sublattice(l, Pattern::N5);
    auto m3 = find_forbidden_sublattice(l, Pattern::M3);
    CHECK(c.modular == !n5);
    CHECK(c.distributive == (!n5 && !m3));
    for (const auto& w : {n5, m3})
      if (w) CHECK(l.closed(*w));
    CHECK(c.sectionally_complemented == !sectional_complement_failure(l));
  }
}

TEST_CASE("forbidden sublattice shapes") {
  Lattice n5 = named::n5();
  auto w = find_forbidden_sublattice(n5, Pattern::N5);
  REQUIRE(w);
  CHECK(std::set<int>(w->begin(), w->end()).size() == 5);
  CHECK(oracle::lattice_isomorphic(n5.sublattice(*w), n5));
  CHECK_FALSE(find_forbidden_sublattice(named::boolean(3), Pattern::N5));
  CHECK_FALSE(find_forbidden_sublattice(named::boolean(3), Pattern::M3));
  auto m = find_forbidden_sublattice(named::partition_lattice(3), Pattern::M3);
  REQUIRE(m);
}

TEST_CASE("partition lattices") {
  for (std::size_t k = 3; k <= 4; ++k) {
    Lattice part = named::partition_lattice(k);
    CHECK(part.size() == (k == 3 ? 5u : 15u));
    auto c = classify(part);
    CHECK(c.upper_semimodular);
    CHECK(c.modular == (k <= 3));
  }
}

TEST_CASE("sublattice closure") {
  Lattice n5 = named::n5();
  CHECK(sublattice_closure(n5, {n5.zero(), n5.one()}) == std::vector<int>{n5.zero(), n5.one()});
  auto h = sublattice_closure(n5, {n5.at("a"), n5.at("c")});
  CHECK(h == std::vector<int>{n5.at("o"), n5.at("a"), n5.at("c"), n5.at("i")});
  // three atoms of B4: their pairwise joins generate a copy of B3
  Lattice b4 = named::boolean(4);
  auto g = sublattice_closure(b4, {1 | 2, 2 | 4, 4 | 1});
  CHECK(g.size() == 8);
  CHECK(oracle::lattice_isomorphic(b4.sublattice(g), named::boolean(3)));
  // the same holds in every lattice whenever the three joins are pairwise incomparable
  for (const auto& l : upto(7)) {
    const int n = int(l.size());
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          int u = l.join(x, y), v = l.join(y, z), t = l.join(z, x);
          if (!l.poset().parallel(u, v) || !l.poset().parallel(v, t) || !l.poset().parallel(u, t)) continue;
          auto s = sublattice_closure(l, {u, v, t});
          CHECK(oracle::lattice_isomorphic(l.sublattice(s), named::boolean(3)));
        }
  }
}

TEST_CASE("finitely generated distributive sublattices stay small") {
  std::size_t largest = 0;
  for (const auto& l : upto(8)) {
    if (!is_distributive(l)) continue;
    const int n = int(l.size());
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y)
        for (int z = y; z < n; ++z) largest = std::max(largest, sublattice_closure(l, {x, y, z}).size());
  }
  CHECK(largest <= 18);
}

TEST_CASE("Birkhoff isomorphism") {
  auto b3 = birkhoff_iso(named::boolean(3));
  CHECK(b3.ji_poset.cover_pairs().empty());
  CHECK(b3.dn.lattice.size() == 8);
  auto c4 = birkhoff_iso(named::chain(4));
  CHECK(are_isomorphic(c4.ji_poset, chain_poset(3)));
  CHECK_THROWS_AS(birkhoff_iso(named::n5()), OrderError);
  for (const auto& l : upto(7)) {
    if (!is_distributive(l)) continue;
    auto b = birkhoff_iso(l);
    CHECK(is_lattice_isomorphism(l, b.dn.lattice, b.map));
    // J(a) is the set of join-irreducibles below a
    for (int a = 0; a < int(l.size()); ++a) {
      const Bits& s = b.dn.sets[b.map[a]];
      for (std::size_t k = 0; k < b.ji.size(); ++k) CHECK(s[k] == l.leq(b.ji[k], a));
    }
  }
}

TEST_CASE("duality maps") {
  Lattice c2 = named::chain(2);
  CHECK(ji_map(c2, c2, {0, 1}) == std::vector<int>{1});

  // all bounded homomorphisms B2 -> C3 round-trip
  Lattice b2 = named::boolean(2), c3 = named::chain(3);
  int homs = 0;
  for (int p1 = 0; p1 < 3; ++p1)
    for (int p2 = 0; p2 < 3; ++p2) {
      std::vector<int> phi{0, p1, p2, 2};
      if (check_bounded_hom(b2, c3, phi)) continue;
      ++homs;
      CHECK(hom_from_ji_map(b2, c3, ji_map(b2, c3, phi)) == phi);
    }
  CHECK(homs == 2);
  CHECK(check_bounded_hom(b2, c3, {0, 1, 1, 1}));

  // a surjection B3 -> B2 (forget the third coordinate) gives an order embedding
  Lattice b3 = named::boolean(3);
  std::vector<int> proj(8);
  for (int s = 0; s < 8; ++s) proj[s] = s & 3;
  auto j = ji_map(b3, b2, proj);
  auto jb2 = irreducibles(b2).join_irreducibles;
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      CHECK(b2.leq(jb2[a], jb2[b]) == b3.leq(j[a], j[b]));
}

TEST_CASE("duality maps over all small distributive pairs") {
  std::vector<Lattice> ds;
  for (const auto& l : upto(5))
    if (is_distributive(l) && l.size() > 1) ds.push_back(l);
  for (const auto& d : ds)
    for (const auto& e : ds) {
      const int n = int(d.size()), m = int(e.size());
      std::vector<int> phi(n, 0);
      auto jd = irreducibles(d).join_irreducibles;
      auto je = irreducibles(e).join_irreducibles;
      // odometer over all maps d -> e
      while (true) {
        if (!check_bounded_hom(d, e, phi)) {
          auto psi = ji_map(d, e, phi);
          CHECK(hom_from_ji_map(d, e, psi) == phi);
          std::set<int> phis(phi.begin(), phi.end()), psis(psi.begin(), psi.end());
          bool injective = int(phis.size()) == n;
          bool surjective = psis.size() == jd.size();
          for (int x : psi) CHECK(std::count(jd.begin(), jd.end(), x) == 1);
          CHECK(injective == surjective);
          bool onto = int(phis.size()) == m;
          bool embedding = true;
          for (std::size_t a = 0; a < psi.size(); ++a)
            for (std::size_t b = 0; b < psi.size(); ++b)
              embedding &= e.leq(je[a], je[b]) == d.leq(psi[a], psi[b]);
          CHECK(onto == embedding);
        }
        int i = 0;
        while (i < n && ++phi[i] == m) phi[i++] = 0;
        if (i == n) break;
      }
    }
}
