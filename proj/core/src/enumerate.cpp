// Lattices up to isomorphism, grown one coatom at a time.
//
// Deleting a coatom from a lattice leaves a lattice, so every (k+1)-element
// lattice is some k-element lattice with a new coatom placed over a nonempty
// antichain of non-top elements.
#include <algorithm>
#include <map>
#include <set>

#include "latw/lattice.hpp"

namespace latw {

namespace {

struct Entry {
  std::vector<int> levels;
  std::vector<int> code;
  Lattice lattice;
};

std::vector<int> level_sequence(const Poset& p) {
  std::vector<int> lv(p.length() + 1, 0);
  for (std::size_t a = 0; a < p.size(); ++a) ++lv[p.height(int(a))];
  return lv;
}

Lattice relabel(const Poset& p, const std::vector<int>& order) {
  std::vector<int> pos(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = int(i);
  std::vector<CoverPair> pairs;
  for (auto [a, b] : p.cover_pairs()) pairs.emplace_back(pos[a], pos[b]);
  return Lattice::from_covers(p.size(), pairs);
}

std::vector<Entry> next_level(const std::vector<Entry>& prev) {
  std::map<std::vector<int>, Entry> found;
  for (const auto& e : prev) {
    const Lattice& k = e.lattice;
    const int n = int(k.size());
    const int top = k.one();
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
      if (x != top) rest.push_back(x);
    auto base = k.poset().cover_pairs();
    for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
      std::vector<int> a;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask >> i & 1u) a.push_back(rest[i]);
      bool anti = true;
      for (std::size_t i = 0; i < a.size() && anti; ++i)
        for (std::size_t j = i + 1; j < a.size() && anti; ++j)
          anti = k.poset().parallel(a[i], a[j]);
      if (!anti) continue;
      auto pairs = base;
      for (int x : a) pairs.emplace_back(x, n);
      pairs.emplace_back(n, top);
      Poset p = Poset::from_covers(n + 1, pairs);
      try {
        (void)Lattice::from_poset(p);
      } catch (const NotALattice&) {
        continue;
      }
      auto cf = canonical_form(p);
      if (found.count(cf.code)) continue;
      Lattice l = relabel(p, cf.order);
      found.emplace(cf.code, Entry{level_sequence(l.poset()), cf.code, std::move(l)});
    }
  }
  std::vector<Entry> out;
  for (auto& [code, e] : found) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.levels, x.code) < std::tie(y.levels, y.code);
  });
  return out;
}

}  // namespace

std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n == 0) throw OrderError("lattices have at least one element");
  if (n > 8) throw OrderError("enumeration is limited to n <= 8");
  auto single = [](std::size_t k) {
    Lattice l = Lattice::from_poset(chain_poset(k));
    return Entry{level_sequence(l.poset()), canonical_form(l.poset()).code, l};
  };
  std::vector<Entry> level{single(std::min<std::size_t>(n, 2))};
  for (std::size_t k = 2; k < n; ++k) level = next_level(level);
  std::vector<Lattice> out;
  for (auto& e : level) out.push_back(std::move(e.lattice));
  return out;
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > 7) throw OrderError("poset enumeration is limited to n <= 7");
  // Removing a maximal element leaves a poset, so add a new maximal point
  // above each down set of every smaller poset.
  std::map<std::vector<int>, Poset> level{{canonical_form(Poset()).code, Poset()}};
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::vector<int>, Poset> next;
    for (const auto& [code, p] : level) {
      const std::size_t m = p.size();
      for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        Bits d(m);
        for (std::size_t i = 0; i < m; ++i) d[i] = mask >> i & 1ul;
        if (!p.is_down_set(d)) continue;
        std::vector<CoverPair> pairs = p.cover_pairs();
        for (std::size_t i = 0; i < m; ++i)
          if (d[i]) pairs.emplace_back(int(i), int(m));
        Poset q = Poset::from_covers(m + 1, pairs);
        auto cf = canonical_form(q);
        if (next.count(cf.code)) continue;
        std::vector<int> pos(q.size());
        for (std::size_t i = 0; i < cf.order.size(); ++i) pos[cf.order[i]] = int(i);
        std::vector<CoverPair> relabelled;
        for (auto [a, b] : q.cover_pairs()) relabelled.emplace_back(pos[a], pos[b]);
        next.emplace(cf.code, Poset::from_covers(q.size(), relabelled));
      }
    }
    level = std::move(next);
  }
  std::vector<Poset> out;
  for (auto& [code, p] : level) out.push_back(std::move(p));
  return out;
}

}  // namespace latw
