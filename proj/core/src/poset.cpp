#include "latw/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace latw {

namespace {

std::string pair_text(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

Poset Poset::from_covers(std::size_t n, const std::vector<CoverPair>& pairs) {
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || std::size_t(a) >= n || std::size_t(b) >= n)
      throw OrderError("index out of range in cover pair " + pair_text(a, b));
    if (a == b) throw OrderError("cycle: self-cover " + pair_text(a, b));
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int b : s) ++indeg[b];
  }
  // Kahn; whatever is left over sits on a cycle.
  std::vector<int> topo;
  std::queue<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(int(v));
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    topo.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (topo.size() != n) {
    for (std::size_t v = 0; v < n; ++v)
      if (indeg[v] > 0) throw OrderError("cycle through element " + std::to_string(v));
  }

  Poset p;
  p.n_ = n;
  p.up_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    p.up_[v].set(v);
    for (int w : succ[v]) p.up_[v] |= p.up_[w];
  }
  p.finish();
  return p;
}

Poset Poset::from_relation(std::size_t n, const std::function<bool(int, int)>& leq) {
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(int(a), int(b))) up[a].set(b);
  return from_rows(std::move(up));
}

Poset Poset::from_rows(std::vector<Bits> up) {
  const std::size_t n = up.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (up[a].size() != n) throw OrderError("relation row has wrong width");
    if (!up[a][a]) throw OrderError("relation not reflexive at " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = up[a].find_first(); b != Bits::npos; b = up[a].find_next(b)) {
      if (b != a && up[b][a]) throw OrderError("cycle: " + pair_text(int(a), int(b)));
      if (!up[b].is_subset_of(up[a]))
        throw OrderError("relation not transitive through " + pair_text(int(a), int(b)));
    }
  }
  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = n_;
  down_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b))
      down_[b].set(a);

  ucov_.assign(n, {});
  lcov_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    Bits strict = up_[a];
    strict.reset(a);
    Bits above(n);
    for (std::size_t c = strict.find_first(); c != Bits::npos; c = strict.find_next(c)) {
      Bits s = up_[c];
      s.reset(c);
      above |= s;
    }
    Bits cov = strict - above;
    for (std::size_t b = cov.find_first(); b != Bits::npos; b = cov.find_next(b)) {
      ucov_[a].push_back(int(b));
      lcov_[b].push_back(int(a));
    }
  }
  for (auto& l : lcov_) std::sort(l.begin(), l.end());

  // heights along increasing down-set size (a valid linear extension)
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return down_[x].count() < down_[y].count(); });
  height_.assign(n, 0);
  for (int v : order)
    for (int w : lcov_[v]) height_[v] = std::max(height_[v], height_[w] + 1);
}

bool Poset::covers(int a, int b) const {
  const auto& u = ucov_[a];
  return std::binary_search(u.begin(), u.end(), b);
}

int Poset::length() const {
  int m = 0;
  for (int h : height_) m = std::max(m, h);
  return m;
}

std::vector<CoverPair> Poset::cover_pairs() const {
  std::vector<CoverPair> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (int b : ucov_[a]) out.emplace_back(int(a), b);
  return out;
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < n_; ++a)
    if (lcov_[a].empty()) out.push_back(int(a));
  return out;
}

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < n_; ++a)
    if (ucov_[a].empty()) out.push_back(int(a));
  return out;
}

std::vector<int> Poset::topological() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return height_[x] < height_[y]; });
  return order;
}

bool Poset::is_down_set(const Bits& s) const {
  for (std::size_t a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    if (!down_[a].is_subset_of(s)) return false;
  return true;
}

bool Poset::is_up_set(const Bits& s) const {
  for (std::size_t a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    if (!up_[a].is_subset_of(s)) return false;
  return true;
}

Bits Poset::down_closure(const Bits& s) const {
  Bits out(n_);
  for (std::size_t a = s.find_first(); a != Bits::npos; a = s.find_next(a)) out |= down_[a];
  return out;
}

Poset Poset::induced(const std::vector<int>& elems) const {
  const std::size_t k = elems.size();
  std::vector<Bits> up(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (leq(elems[i], elems[j])) up[i].set(j);
  return from_rows(std::move(up));
}

Poset dual(const Poset& p) {
  std::vector<Bits> up;
  up.reserve(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) up.push_back(p.down(int(a)));
  return Poset::from_rows(std::move(up));
}

Poset chain_poset(std::size_t n) {
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(int(i), int(i + 1));
  return Poset::from_covers(n, pairs);
}

Poset antichain_poset(std::size_t n) { return Poset::from_covers(n, {}); }

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<int>& map) {
  const std::size_t n = p.size();
  if (q.size() != n || map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (v < 0 || std::size_t(v) >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(int(a), int(b)) != q.leq(map[a], map[b])) return false;
  return true;
}

}  // namespace latw
