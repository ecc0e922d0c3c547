#include "latw/named.hpp"

#include <algorithm>
#include <regex>

namespace latw::named {

namespace {

Lattice build(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& covers) {
  auto idx = [&](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return int(i);
    throw OrderError("unknown element " + s);
  };
  std::vector<CoverPair> pairs;
  for (const auto& [a, b] : covers) pairs.emplace_back(idx(a), idx(b));
  Lattice l = Lattice::from_covers(names.size(), pairs);
  l.set_names(std::move(names));
  return l;
}

}  // namespace

Lattice chain(std::size_t n) { return Lattice::from_poset(chain_poset(n)); }

Lattice boolean(std::size_t k) {
  const std::size_t n = std::size_t(1) << k;
  std::vector<CoverPair> pairs;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < k; ++i)
      if (!(s >> i & 1u)) pairs.emplace_back(int(s), int(s | (std::size_t(1) << i)));
  return Lattice::from_covers(n, pairs);
}

Lattice m3() {
  return build({"o", "a", "b", "c", "i"},
               {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"a", "i"}, {"b", "i"}, {"c", "i"}});
}

Lattice n5() {
  return build({"o", "a", "b", "c", "i"}, {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}});
}

Lattice n6() {
  return build({"0", "p", "q1", "q2", "q", "1"},
               {{"0", "p"}, {"0", "q1"}, {"0", "q2"}, {"q1", "q"}, {"q2", "q"}, {"q", "1"}, {"p", "1"}});
}

Lattice s7() {
  return build({"0", "x", "y", "a", "m", "b", "1"},
               {{"0", "x"}, {"0", "y"}, {"x", "a"}, {"x", "m"}, {"y", "m"}, {"y", "b"},
                {"a", "1"}, {"m", "1"}, {"b", "1"}});
}

Lattice s8() {
  // three atoms under a common coatom f; b and c each carry a private coatom
  return build({"o", "a", "b", "c", "d", "e", "f", "i"},
               {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"a", "f"}, {"b", "d"}, {"b", "f"},
                {"c", "e"}, {"c", "f"}, {"d", "i"}, {"e", "i"}, {"f", "i"}});
}

Lattice n55() {
  // two copies of N5 sharing the short side {0, c, 1}
  return build({"0", "a", "b", "c", "d", "e", "1"},
               {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}, {"0", "d"}, {"d", "e"},
                {"e", "1"}});
}

Lattice grid(std::size_t m, std::size_t n) {
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v = int(i * n + j);
      if (i + 1 < m) pairs.emplace_back(v, int((i + 1) * n + j));
      if (j + 1 < n) pairs.emplace_back(v, v + 1);
    }
  Lattice l = Lattice::from_covers(m * n, pairs);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back(std::to_string(i) + "." + std::to_string(j));
  l.set_names(std::move(names));
  return l;
}

Lattice partition_lattice(std::size_t k) {
  // restricted growth strings enumerate the partitions once each
  std::vector<std::vector<int>> parts;
  std::vector<int> s(k, 0);
  auto rec = [&](auto&& self, std::size_t i, int mx) -> void {
    if (i >= k) {
      parts.push_back(s);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      s[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  if (k == 0) throw OrderError("Part A needs a nonempty A");
  rec(rec, 1, 0);
  auto refines = [&](int a, int b) {
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        if (parts[a][x] == parts[a][y] && parts[b][x] != parts[b][y]) return false;
    return true;
  };
  Lattice l = Lattice::from_poset(Poset::from_relation(parts.size(), refines));
  std::vector<std::string> names;
  for (const auto& p : parts) {
    std::string name;
    for (int b = 0; b <= *std::max_element(p.begin(), p.end()); ++b) {
      if (!name.empty()) name += '|';
      for (std::size_t x = 0; x < k; ++x)
        if (p[x] == b) name += std::to_string(x);
    }
    names.push_back(name);
  }
  l.set_names(std::move(names));
  return l;
}

Lattice by_name(const std::string& name) {
  std::smatch m;
  if (std::regex_match(name, m, std::regex("C(\\d+)"))) return chain(std::stoul(m[1]));
  if (std::regex_match(name, m, std::regex("B(\\d+)"))) return boolean(std::stoul(m[1]));
  if (std::regex_match(name, m, std::regex("grid(\\d+)x(\\d+)")))
    return grid(std::stoul(m[1]), std::stoul(m[2]));
  if (std::regex_match(name, m, std::regex("Part(\\d+)"))) return partition_lattice(std::stoul(m[1]));
  if (name == "M3") return m3();
  if (name == "N5") return n5();
  if (name == "N6") return n6();
  if (name == "S7") return s7();
  if (name == "S8") return s8();
  if (name == "N55") return n55();
  throw OrderError("unknown named lattice " + name);
}

std::vector<std::string> corpus_names() {
  return {"C1", "C2", "C3", "C4", "C5", "B2", "B3", "M3", "N5", "N6",
          "S7", "S8", "N55", "grid2x3", "grid3x3", "grid3x4"};
}

}  // namespace latw::named
