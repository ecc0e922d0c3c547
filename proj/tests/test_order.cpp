#include <doctest.h>

#include <random>

#include "latw/lattice.hpp"
#include "oracles.hpp"

using namespace latw;

namespace {

Poset random_poset(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<CoverPair> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  return Poset::from_covers(n, pairs);
}

Poset shuffled(const Poset& p, std::mt19937& rng) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<CoverPair> pairs;
  for (auto [a, b] : p.cover_pairs()) pairs.emplace_back(perm[a], perm[b]);
  return Poset::from_covers(p.size(), pairs);
}

}  // namespace

TEST_CASE("poset from covers") {
  Poset one = Poset::from_covers(1, {});
  CHECK(one.size() == 1);
  CHECK(one.leq(0, 0));

  Poset c3 = Poset::from_covers(3, {{0, 1}, {1, 2}});
  int related = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) related += c3.leq(a, b);
  CHECK(related == 6);

  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), OrderError);
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), OrderError);
  CHECK_THROWS_AS(Poset::from_covers(2, {{1, 1}}), OrderError);
}

TEST_CASE("redundant covers are reduced") {
  Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.cover_pairs() == std::vector<CoverPair>{{0, 1}, {1, 2}});
  CHECK(p.covers(0, 1));
  CHECK_FALSE(p.covers(0, 2));
}

TEST_CASE("cover relation is the transitive reduction") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + int(rng() % 9);
    Poset p = random_poset(rng, n, 0.35);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool between = false;
        for (int c = 0; c < n; ++c) between |= p.lt(a, c) && p.lt(c, b);
        CHECK(p.covers(a, b) == (p.lt(a, b) && !between));
        // reflexive, antisymmetric, transitive
        if (a == b) CHECK(p.leq(a, b));
        if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
        for (int c = 0; c < n; ++c)
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
      }
    CHECK(Poset::from_covers(n, p.cover_pairs()) == p);
  }
}

TEST_CASE("length of chains") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(chain_poset(n).length() == int(n) - 1);
}

TEST_CASE("down set lattices") {
  for (std::size_t k = 0; k <= 6; ++k)
    CHECK(down_set_lattice(antichain_poset(k)).lattice.size() == (std::size_t(1) << k));
  auto b2 = down_set_lattice(antichain_poset(2)).lattice;
  CHECK(are_isomorphic(b2.poset(), Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  auto c3 = down_set_lattice(chain_poset(2)).lattice;
  CHECK(are_isomorphic(c3.poset(), chain_poset(3)));
  // alpha < beta, alpha < gamma: subsets filtered by down-closure
  Poset v = Poset::from_covers(3, {{0, 1}, {0, 2}});
  int down = 0;
  for (unsigned m = 0; m < 8; ++m) {
    bool closed = true;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if ((m >> x & 1u) && v.leq(y, x) && !(m >> y & 1u)) closed = false;
    down += closed;
  }
  CHECK(down == 5);
  auto dv = down_set_lattice(v);
  CHECK(dv.lattice.size() == 5);
  // join is union, meet is intersection
  for (std::size_t a = 0; a < dv.sets.size(); ++a)
    for (std::size_t b = 0; b < dv.sets.size(); ++b) {
      CHECK(dv.sets[dv.lattice.join(int(a), int(b))] == (dv.sets[a] | dv.sets[b]));
      CHECK(dv.sets[dv.lattice.meet(int(a), int(b))] == (dv.sets[a] & dv.sets[b]));
    }
}

TEST_CASE("duality") {
  Poset c3 = chain_poset(3);
  CHECK(are_isomorphic(dual(c3), c3));
  Poset n5 = Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  Poset d = dual(n5);
  CHECK(d.size() == 5);
  for (auto [a, b] : n5.cover_pairs()) CHECK(d.covers(b, a));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    Poset p = random_poset(rng, 1 + int(rng() % 8), 0.4);
    CHECK(dual(dual(p)) == p);
  }
}

TEST_CASE("isomorphism basics") {
  std::mt19937 rng(11);
  Poset c4 = chain_poset(4);
  auto m = are_isomorphic(c4, shuffled(c4, rng));
  REQUIRE(m);
  Poset s = shuffled(c4, rng);
  CHECK(is_order_isomorphism(c4, s, *are_isomorphic(c4, s)));
  Poset b2 = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(are_isomorphic(c4, b2));
  // 4-element witness that is not self-dual: a bottom under three maximal points
  Poset claw = Poset::from_covers(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(are_isomorphic(claw, dual(claw)));
  CHECK_FALSE(oracle::isomorphic(claw, dual(claw)));
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + int(rng() % 6);
    Poset p = random_poset(rng, n, 0.4);
    Poset q = rng() % 2 ? shuffled(p, rng) : random_poset(rng, n, 0.4);
    auto iso = are_isomorphic(p, q);
    CHECK(bool(iso) == oracle::isomorphic(p, q));
    if (iso) CHECK(is_order_isomorphism(p, q, *iso));
    // reflexive and symmetric
    CHECK(are_isomorphic(p, p));
    CHECK(bool(are_isomorphic(q, p)) == bool(iso));
  }
}

TEST_CASE("canonical form is a complete invariant on random relabelings") {
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    Poset p = random_poset(rng, 2 + int(rng() % 14), 0.3);
    CHECK(canonical_form(p).code == canonical_form(shuffled(p, rng)).code);
  }
}
