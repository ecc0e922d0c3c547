#include "latw/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace latw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  Congruence result() {
    std::vector<int> s(parent.size());
    for (std::size_t x = 0; x < s.size(); ++x) s[x] = find(int(x));
    return Congruence(std::move(s));
  }
};

}  // namespace

Congruence::Congruence(std::vector<int> block_of) : block_of_(std::move(block_of)) {
  std::unordered_map<int, int> map;
  for (int& b : block_of_) {
    auto [it, fresh] = map.try_emplace(b, int(map.size()));
    b = it->second;
  }
  count_ = map.size();
}

Congruence Congruence::from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> s(n, -1);
  int id = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || std::size_t(x) >= n || s[x] >= 0) throw OrderError("blocks do not form a partition");
      s[x] = id;
    }
    ++id;
  }
  for (int v : s)
    if (v < 0) throw OrderError("blocks do not cover every element");
  return Congruence(std::move(s));
}

Congruence Congruence::zero(std::size_t n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  return Congruence(std::move(s));
}

Congruence Congruence::one(std::size_t n) { return Congruence(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out(count_);
  for (std::size_t x = 0; x < size(); ++x) out[block_of_[x]].push_back(int(x));
  return out;
}

std::vector<int> Congruence::block_members(int x) const {
  std::vector<int> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (block_of_[y] == block_of_[x]) out.push_back(int(y));
  return out;
}

bool Congruence::refines(const Congruence& o) const {
  if (o.size() != size()) return false;
  // each of our blocks must sit inside one block of o
  std::vector<int> image(count_, -1);
  for (std::size_t x = 0; x < size(); ++x) {
    int& im = image[block_of_[x]];
    if (im < 0) im = o.block_of_[x];
    else if (im != o.block_of_[x]) return false;
  }
  return true;
}

std::string to_string(const Lattice& l, const Congruence& c) {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : c.blocks()) {
    if (!first_block) os << ",";
    first_block = false;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << l.name(b[i]);
    os << "}";
  }
  return os.str();
}

std::optional<SPFailure> sp_failure(const Lattice& l, const Congruence& pi) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!pi.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!pi.related(l.meet(x, z), l.meet(y, z))) return SPFailure{x, y, z, false};
        if (!pi.related(l.join(x, z), l.join(y, z))) return SPFailure{x, y, z, true};
      }
    }
  return std::nullopt;
}

bool is_congruence(const Lattice& l, const Congruence& pi) {
  return pi.size() == l.size() && !sp_failure(l, pi);
}

bool is_congruence_by_intervals(const Lattice& l, const Congruence& pi) {
  if (pi.size() != l.size()) return false;
  for (const auto& b : pi.blocks()) {
    int lo = l.meet(b), hi = l.join(b);
    if (l.interval(lo, hi) != b) return false;
  }
  const Poset& p = l.poset();
  for (int x = 0; x < int(l.size()); ++x) {
    const auto& up = p.upper_covers(x);
    for (int y : up)
      for (int z : up)
        if (y != z && pi.related(x, y) && !pi.related(z, l.join(y, z))) return false;
    const auto& dn = p.lower_covers(x);
    for (int y : dn)
      for (int z : dn)
        if (y != z && pi.related(x, y) && !pi.related(z, l.meet(y, z))) return false;
  }
  return true;
}

Congruence generated(const Lattice& l, const std::vector<std::pair<int, int>>& pairs) {
  const int n = int(l.size());
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  // Every recorded union is pushed once; translating all of them by every z
  // closes the equivalence under the lattice operations.
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < n; ++z) {
      int u = l.join(x, z), v = l.join(y, z);
      if (uf.unite(u, v)) work.emplace_back(u, v);
      u = l.meet(x, z);
      v = l.meet(y, z);
      if (uf.unite(u, v)) work.emplace_back(u, v);
    }
  }
  return uf.result();
}

Congruence principal(const Lattice& l, int a, int b) {
  return generated(l, {{l.meet(a, b), l.join(a, b)}});
}

Congruence collapse_set(const Lattice& l, const std::vector<int>& h) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 1; i < h.size(); ++i) pairs.emplace_back(h[0], h[i]);
  return generated(l, pairs);
}

Congruence cong_meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw OrderError("congruences of different lattices");
  std::vector<int> s(a.size());
  for (std::size_t x = 0; x < s.size(); ++x) s[x] = a.block(int(x)) * int(b.size()) + b.block(int(x));
  return Congruence(std::move(s));
}

Congruence cong_join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw OrderError("congruences of different lattices");
  UnionFind uf(a.size());
  std::vector<int> first_a(a.block_count(), -1), first_b(b.block_count(), -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    int& fa = first_a[a.block(int(x))];
    if (fa < 0) fa = int(x);
    else uf.unite(fa, int(x));
    int& fb = first_b[b.block(int(x))];
    if (fb < 0) fb = int(x);
    else uf.unite(fb, int(x));
  }
  return uf.result();
}

}  // namespace latw
