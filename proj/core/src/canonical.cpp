// Individualization-refinement canonical labelling for small posets.
#include <algorithm>
#include <map>
#include <numeric>

#include "latw/poset.hpp"

namespace latw {

namespace {

using Colors = std::vector<int>;

// Relabel signatures to dense ranks; rank order depends only on signatures.
template <class Sig>
Colors rank(const std::vector<Sig>& sig) {
  std::vector<Sig> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors c(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v)
    c[v] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  return c;
}

int count_colors(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Colors refine(const Poset& p, Colors c) {
  const std::size_t n = p.size();
  int k = count_colors(c);
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.push_back(c[v]);
      std::vector<int> lo, hi;
      for (int w : p.lower_covers(int(v))) lo.push_back(c[w]);
      for (int w : p.upper_covers(int(v))) hi.push_back(c[w]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      s.push_back(int(lo.size()));
      s.insert(s.end(), lo.begin(), lo.end());
      s.push_back(-1);
      s.insert(s.end(), hi.begin(), hi.end());
    }
    Colors next = rank(sig);
    int nk = count_colors(next);
    c = std::move(next);
    if (nk == k) return c;
    k = nk;
  }
}

struct Search {
  const Poset& p;
  std::size_t n;
  std::vector<int> best_order, best_code;
  bool have = false;
  std::vector<std::vector<int>> automorphisms;

  explicit Search(const Poset& poset) : p(poset), n(poset.size()) {}

  std::vector<int> leaf_code(const std::vector<int>& order) const {
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = int(i);
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : p.cover_pairs()) e.emplace_back(pos[a], pos[b]);
    std::sort(e.begin(), e.end());
    std::vector<int> code{int(n)};
    for (auto [a, b] : e) {
      code.push_back(a);
      code.push_back(b);
    }
    return code;
  }

  void visit(const Colors& c, std::vector<int>& path) {
    int k = count_colors(c);
    if (std::size_t(k) == n) {
      std::vector<int> order(n);
      for (std::size_t v = 0; v < n; ++v) order[c[v]] = int(v);
      auto code = leaf_code(order);
      if (!have || code < best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
        have = true;
      } else if (code == best_code) {
        std::vector<int> aut(n);
        for (std::size_t i = 0; i < n; ++i) aut[best_order[i]] = order[i];
        automorphisms.push_back(std::move(aut));
      }
      return;
    }
    // first non-singleton cell
    std::vector<int> size(k, 0);
    for (int x : c) ++size[x];
    int cell = 0;
    while (size[cell] < 2) ++cell;
    std::vector<int> members;
    for (std::size_t v = 0; v < n; ++v)
      if (c[v] == cell) members.push_back(int(v));

    std::vector<int> explored;
    for (int v : members) {
      if (pruned(v, explored, path)) continue;
      explored.push_back(v);
      Colors d(n);
      for (std::size_t w = 0; w < n; ++w) {
        if (c[w] < cell || int(w) == v) d[w] = c[w];
        else d[w] = c[w] + 1;
      }
      path.push_back(v);
      visit(refine(p, std::move(d)), path);
      path.pop_back();
    }
  }

  // Orbit pruning with the automorphisms found so far that fix `path`.
  bool pruned(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    if (explored.empty() || automorphisms.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& g : automorphisms) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int x) { return g[x] == x; });
      if (!fixes) continue;
      any = true;
      for (std::size_t x = 0; x < n; ++x) parent[find(int(x))] = find(g[x]);
    }
    if (!any) return false;
    for (int e : explored)
      if (find(e) == find(v)) return true;
    return false;
  }
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {{}, {0}};
  std::vector<std::array<int, 3>> init(n);
  for (std::size_t v = 0; v < n; ++v)
    init[v] = {p.height(int(v)), int(p.lower_covers(int(v)).size()),
               int(p.upper_covers(int(v)).size())};
  Search s(p);
  std::vector<int> path;
  s.visit(refine(p, rank(init)), path);
  return {std::move(s.best_order), std::move(s.best_code)};
}

std::optional<std::vector<int>> are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.cover_pairs().size() != q.cover_pairs().size()) return std::nullopt;
  auto cp = canonical_form(p);
  auto cq = canonical_form(q);
  if (cp.code != cq.code) return std::nullopt;
  std::vector<int> map(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) map[cp.order[i]] = cq.order[i];
  return map;
}

}  // namespace latw
