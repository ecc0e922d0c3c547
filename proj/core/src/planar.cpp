#include "latw/planar.hpp"

#include "latw/named.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace latw {

namespace {

// Cells between adjacent upper covers, from the cover orders alone.
std::vector<Cell> cells_from(const Lattice& l, const std::vector<std::vector<int>>& ups) {
  std::vector<Cell> out;
  for (int o = 0; o < int(l.size()); ++o) {
    const auto& up = ups[o];
    for (std::size_t k = 0; k + 1 < up.size(); ++k) {
      Cell c;
      c.bottom = o;
      c.top = l.join(up[k], up[k + 1]);
      // left side hugs the cell from the left, right side from the right
      for (int x = up[k]; x != c.top;) {
        c.left.push_back(x);
        int next = -1;
        for (int u : ups[x])
          if (l.leq(u, c.top)) next = u;
        x = next;
      }
      for (int x = up[k + 1]; x != c.top;) {
        c.right.push_back(x);
        int next = -1;
        for (int u : ups[x])
          if (l.leq(u, c.top)) {
            next = u;
            break;
          }
        x = next;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Appends `extra`, priming a name until it is unused.
std::vector<std::string> extend_names(const Lattice& l, std::size_t total, const std::vector<std::string>& extra) {
  if (l.names().empty()) return {};
  std::vector<std::string> nm = l.names();
  for (std::string s : extra) {
    while (std::find(nm.begin(), nm.end(), s) != nm.end()) s += '\'';
    nm.push_back(s);
  }
  nm.resize(total);
  return nm;
}

std::vector<CoverPair> pairs_of(const std::vector<std::vector<int>>& up) {
  std::vector<CoverPair> out;
  for (int x = 0; x < int(up.size()); ++x)
    for (int u : up[x]) out.emplace_back(x, u);
  return out;
}

PlanarDiagram build(std::size_t n, const std::vector<std::vector<int>>& up, std::vector<std::string> names) {
  Lattice l = Lattice::from_covers(n, pairs_of(up));
  if (!names.empty()) l.set_names(std::move(names));
  return PlanarDiagram(std::move(l), up);
}

bool is_chain(const Lattice& l, const std::vector<int>& xs) {
  for (int a : xs)
    for (int b : xs)
      if (!l.poset().comparable(a, b)) return false;
  return true;
}

int position_in_chain(const Lattice& l, const std::vector<int>& chain, int x) {
  int k = 0;
  for (int z : chain)
    if (l.lt(z, x)) ++k;
  return k;
}

}  // namespace

PlanarDiagram::PlanarDiagram(Lattice l, std::vector<std::vector<int>> up) : l_(std::move(l)), up_(std::move(up)) {
  if (up_.size() != l_.size()) throw OrderError("one cover list per element is required");
  for (std::size_t x = 0; x < up_.size(); ++x) {
    auto a = up_[x], b = l_.poset().upper_covers(int(x));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw OrderError("cover list of " + l_.name(int(x)) + " is not its set of upper covers");
  }
  finish();
}

PlanarDiagram PlanarDiagram::from_positions(Lattice l, const std::vector<double>& x) {
  std::vector<std::vector<int>> up(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    up[a] = l.poset().upper_covers(int(a));
    std::stable_sort(up[a].begin(), up[a].end(), [&](int u, int v) { return x[u] < x[v]; });
  }
  return PlanarDiagram(std::move(l), std::move(up));
}

void PlanarDiagram::finish() {
  const int n = int(size());
  // each cell with top t places the last edge of its left side immediately
  // left of the last edge of its right side
  std::vector<std::map<int, int>> succ(n);
  consistent_ = true;
  for (const auto& c : cells_from(l_, up_)) {
    auto [it, fresh] = succ[c.top].emplace(c.left.back(), c.right.back());
    if (!fresh && it->second != c.right.back()) consistent_ = false;
  }
  down_.assign(n, {});
  for (int t = 0; t < n; ++t) {
    const auto& lc = l_.poset().lower_covers(t);
    std::set<int> targets;
    for (auto [a, b] : succ[t]) targets.insert(b);
    std::vector<int> order;
    for (int y : lc)
      if (!targets.count(y)) order.push_back(y);
    if (order.size() == 1) {
      for (auto it = succ[t].find(order[0]); it != succ[t].end() && order.size() <= lc.size();
           it = succ[t].find(order.back()))
        order.push_back(it->second);
    }
    auto sorted = order, expect = lc;
    std::sort(sorted.begin(), sorted.end());
    std::sort(expect.begin(), expect.end());
    if (sorted != expect) {
      consistent_ = false;
      order = lc;
    }
    down_[t] = std::move(order);
  }
  on_left_.assign(n, false);
  on_right_.assign(n, false);
  for (int x : left_boundary()) on_left_[x] = true;
  for (int x : right_boundary()) on_right_[x] = true;
}

std::vector<int> PlanarDiagram::left_boundary() const {
  std::vector<int> c{l_.zero()};
  while (!up_[c.back()].empty()) c.push_back(up_[c.back()].front());
  return c;
}

std::vector<int> PlanarDiagram::right_boundary() const {
  std::vector<int> c{l_.zero()};
  while (!up_[c.back()].empty()) c.push_back(up_[c.back()].back());
  return c;
}

unsigned PlanarDiagram::side(int x, const std::vector<int>& chain) const {
  const int n = int(size());
  std::vector<int> next(n, -2);  // -2: off the chain
  for (std::size_t k = 0; k < chain.size(); ++k) next[chain[k]] = k + 1 < chain.size() ? chain[k + 1] : -1;
  std::vector<unsigned> sides(n, 0);
  for (int v : l_.poset().topological()) {
    if (next[v] != -2) continue;
    for (int y : l_.poset().lower_covers(v)) {
      if (next[y] == -2) {
        sides[v] |= sides[y];
        continue;
      }
      const auto& u = up_[y];
      auto pv = std::find(u.begin(), u.end(), v), pc = std::find(u.begin(), u.end(), next[y]);
      sides[v] |= pv < pc ? 1u : 2u;
    }
    if (v == x) break;
  }
  return sides[x];
}

bool PlanarDiagram::left_of(int a, int b) const {
  if (!l_.poset().parallel(a, b)) return false;
  // leftmost maximal chain through b
  std::vector<int> chain{l_.zero()};
  while (chain.back() != b)
    for (int u : up_[chain.back()])
      if (l_.leq(u, b)) {
        chain.push_back(u);
        break;
      }
  while (!up_[chain.back()].empty()) chain.push_back(up_[chain.back()].front());
  return side(a, chain) == 1u;
}

namespace {

// Faces of the rotation system: upper covers left to right, then lower covers
// right to left, clockwise around each element.
struct Faces {
  std::size_t count = 0;
  std::vector<CoverPair> outer;  // darts of the face through 0 -> leftmost cover
};

Faces trace_faces(const PlanarDiagram& d) {
  const int n = int(d.size());
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[v] = d.upper(v);
    rot[v].insert(rot[v].end(), d.lower(v).rbegin(), d.lower(v).rend());
  }
  auto at = [&](int v, int w) { return int(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin()); };
  std::set<CoverPair> seen;
  Faces f;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) {
      if (seen.count({u, v})) continue;
      ++f.count;
      std::vector<CoverPair> orbit;
      bool outer = false;
      for (CoverPair e{u, v}; !seen.count(e);) {
        seen.insert(e);
        orbit.push_back(e);
        outer = outer || (e.first == d.lattice().zero() && e.second == d.upper(e.first).front());
        const auto& r = rot[e.second];
        e = {e.second, r[(at(e.second, e.first) + 1) % r.size()]};
      }
      if (outer) f.outer = std::move(orbit);
    }
  return f;
}

bool planar_ok(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  bool ok = d.lower_orders_consistent();
  if (ok && d.size() > 1) {
    Faces f = trace_faces(d);
    const long v = long(d.size()), e = long(l.poset().cover_pairs().size());
    ok = v - e + long(f.count) == 2;
    auto cl = d.left_boundary(), cr = d.right_boundary();
    std::set<CoverPair> outer(f.outer.begin(), f.outer.end()), expect;
    for (std::size_t k = 1; k < cl.size(); ++k) expect.insert({cl[k - 1], cl[k]});
    for (std::size_t k = 1; k < cr.size(); ++k) expect.insert({cr[k], cr[k - 1]});
    ok = ok && outer == expect;
  }
  return ok;
}

}  // namespace

PlanarCheck validate_planar(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  PlanarCheck out;
  if (planar_ok(d)) {
    out.valid = true;
    return out;
  }
  // Witness: a maximal chain C and an element reached both by leaving C to the
  // left and to the right.  The last edge of the left route crosses the edge
  // of C where the right route departs.
  const int n = int(l.size());
  std::vector<int> chain{l.zero()};
  std::size_t budget = 100000;
  auto search = [&](auto&& self) -> bool {
    int top = chain.back();
    if (d.upper(top).empty()) {
      if (budget-- == 0) return true;
      std::vector<int> next(n, -2);
      for (std::size_t k = 0; k < chain.size(); ++k) next[chain[k]] = k + 1 < chain.size() ? chain[k + 1] : -1;
      std::vector<unsigned> sides(n, 0);
      std::vector<CoverPair> left_in(n), right_dep(n);
      for (int v : l.poset().topological()) {
        if (next[v] != -2) continue;
        for (int y : l.poset().lower_covers(v)) {
          unsigned s;
          CoverPair dep;
          if (next[y] == -2) {
            s = sides[y];
            dep = right_dep[y];
          } else {
            const auto& u = d.upper(y);
            s = std::find(u.begin(), u.end(), v) < std::find(u.begin(), u.end(), next[y]) ? 1u : 2u;
            dep = {y, next[y]};
          }
          if (s & 1u) left_in[v] = {y, v};
          if ((s & 2u) && !(sides[v] & 2u)) right_dep[v] = dep;
          sides[v] |= s;
        }
        if (sides[v] == 3u) {
          out.crossing = std::make_pair(left_in[v], right_dep[v]);
          return true;
        }
      }
      return false;
    }
    for (int u : d.upper(top)) {
      chain.push_back(u);
      bool done = self(self);
      chain.pop_back();
      if (done) return true;
    }
    return false;
  };
  search(search);
  return out;
}

std::optional<PlanarDiagram> find_planar_diagram(const Lattice& l, std::size_t budget) {
  const int n = int(l.size());
  std::vector<std::vector<int>> up(n);
  std::vector<int> free;
  for (int x = 0; x < n; ++x) {
    up[x] = l.poset().upper_covers(x);
    std::sort(up[x].begin(), up[x].end());
    if (up[x].size() > 1) free.push_back(x);
  }
  std::size_t tries = 0;
  std::optional<PlanarDiagram> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found || tries >= budget) return;
    if (k == free.size()) {
      ++tries;
      PlanarDiagram d(l, up);
      if (planar_ok(d)) found = std::move(d);
      return;
    }
    auto& v = up[free[k]];
    std::sort(v.begin(), v.end());
    do {
      self(self, k + 1);
    } while (!found && std::next_permutation(v.begin(), v.end()));
  };
  rec(rec, 0);
  return found;
}

PlanarDiagram grid_diagram(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw OrderError("grid needs nonempty factors");
  Lattice l = named::grid(m, n);
  std::vector<std::vector<int>> up(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& u = up[i * n + j];
      if (i + 1 < m) u.push_back(int((i + 1) * n + j));
      if (j + 1 < n) u.push_back(int(i * n + j + 1));
    }
  return PlanarDiagram(std::move(l), std::move(up));
}

PlanarDiagram interval_diagram(const PlanarDiagram& d, int lo, int hi) {
  const Lattice& l = d.lattice();
  if (!l.leq(lo, hi)) throw OrderError("empty interval");
  auto elems = l.interval(lo, hi);
  std::vector<int> pos(l.size(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) pos[elems[k]] = int(k);
  std::vector<std::vector<int>> up(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int u : d.upper(elems[k]))
      if (pos[u] >= 0) up[k].push_back(pos[u]);
  return PlanarDiagram(l.sublattice(elems), std::move(up));
}

std::vector<Cell> cells(const PlanarDiagram& d) { return cells_from(d.lattice(), d.upper_lists()); }

std::vector<Cell> four_cells(const PlanarDiagram& d) {
  std::vector<Cell> out;
  for (auto& c : cells(d))
    if (c.is_four()) out.push_back(std::move(c));
  return out;
}

std::optional<Cell> four_cell(const PlanarDiagram& d, int bottom, int left, int right, int top) {
  for (auto& c : four_cells(d))
    if (c.corners() == std::array<int, 4>{bottom, left, right, top}) return c;
  return std::nullopt;
}

std::vector<std::array<int, 4>> covering_squares(const Lattice& l) {
  std::vector<std::array<int, 4>> out;
  const Poset& p = l.poset();
  for (int o = 0; o < int(l.size()); ++o) {
    const auto& up = p.upper_covers(o);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        int a = std::min(up[i], up[j]), b = std::max(up[i], up[j]), t = l.join(a, b);
        if (p.covers(a, t) && p.covers(b, t)) out.push_back({o, a, b, t});
      }
  }
  return out;
}

std::vector<std::array<int, 5>> covering_m3s(const Lattice& l) {
  std::vector<std::array<int, 5>> out;
  const Poset& p = l.poset();
  for (int o = 0; o < int(l.size()); ++o) {
    auto up = p.upper_covers(o);
    std::sort(up.begin(), up.end());
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j)
        for (std::size_t k = j + 1; k < up.size(); ++k) {
          int t = l.join(up[i], up[j]);
          if (l.join(up[i], up[k]) == t && p.covers(up[i], t) && p.covers(up[j], t) && p.covers(up[k], t))
            out.push_back({o, up[i], up[j], up[k], t});
        }
  }
  return out;
}

bool is_doubly_irreducible(const Lattice& l, int x) {
  return x != l.zero() && x != l.one() && l.poset().upper_covers(x).size() == 1 &&
         l.poset().lower_covers(x).size() == 1;
}

SPSReport sps_predicates(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  SPSReport r;
  r.planar = planar_ok(d);
  r.semimodular = is_upper_semimodular(l);
  r.slim = covering_m3s(l).empty();
  r.sps = r.planar && r.semimodular && r.slim;
  r.four_cell = true;
  for (const auto& c : cells(d)) r.four_cell = r.four_cell && c.is_four();
  auto corners_on = [&](const std::vector<int>& chain) {
    std::vector<int> out;
    for (int x : chain)
      if (is_doubly_irreducible(l, x)) out.push_back(x);
    return out;
  };
  auto lcs = corners_on(d.left_boundary()), rcs = corners_on(d.right_boundary());
  if (r.planar && r.semimodular && lcs.size() == 1 && rcs.size() == 1 && l.join(lcs[0], rcs[0]) == l.one() &&
      l.meet(lcs[0], rcs[0]) == l.zero()) {
    r.rectangular = true;
    r.lc = lcs[0];
    r.rc = rcs[0];
    r.patch = l.poset().covers(lcs[0], l.one()) && l.poset().covers(rcs[0], l.one());
  }
  r.sr = r.rectangular && r.slim;
  return r;
}

namespace {

std::vector<CoverPair> wing(const PlanarDiagram& d, CoverPair e, bool left) {
  const Lattice& l = d.lattice();
  std::vector<CoverPair> out{e};
  auto on_side = [&](int x) { return left ? d.on_left_boundary(x) : d.on_right_boundary(x); };
  for (;;) {
    auto [p, q] = out.back();
    if (on_side(p) && on_side(q)) return out;
    const auto& dn = d.lower(q);
    auto it = std::find(dn.begin(), dn.end(), p);
    if (left ? it == dn.begin() : it + 1 == dn.end())
      throw OrderError("no 4-cell next to edge [" + l.name(p) + "," + l.name(q) + "]");
    int q2 = left ? *(it - 1) : *(it + 1);
    int p2 = l.meet(p, q2);
    const auto& up = d.upper(p2);
    auto a = std::find(up.begin(), up.end(), left ? q2 : p);
    if (!l.poset().covers(p2, p) || !l.poset().covers(p2, q2) || a == up.end() || a + 1 == up.end() ||
        *(a + 1) != (left ? p : q2))
      throw OrderError("no 4-cell next to edge [" + l.name(p) + "," + l.name(q) + "]");
    out.emplace_back(p2, q2);
  }
}

}  // namespace

std::vector<CoverPair> left_wing(const PlanarDiagram& d, CoverPair e) { return wing(d, e, true); }
std::vector<CoverPair> right_wing(const PlanarDiagram& d, CoverPair e) { return wing(d, e, false); }

ForkInsertion insert_fork(const PlanarDiagram& d, const Cell& c) {
  if (!c.is_four()) throw OrderError("forks go into 4-cells");
  auto [o, cl, cr, top] = c.corners();
  if (!four_cell(d, o, cl, cr, top)) throw OrderError("not a 4-cell of the diagram");
  auto le = left_wing(d, {cr, top});
  auto re = right_wing(d, {cl, top});
  le.erase(le.begin());
  re.erase(re.begin());

  const int n = int(d.size());
  ForkInsertion f;
  f.m = n;
  for (std::size_t k = 0; k < le.size(); ++k) f.xs.push_back(n + 1 + int(k));
  for (std::size_t k = 0; k < re.size(); ++k) f.ys.push_back(n + 1 + int(le.size() + k));
  const std::size_t total = std::size_t(n) + 1 + le.size() + re.size();

  auto up = d.upper_lists();
  up.resize(total);
  auto subdivide = [&](CoverPair e, int mid) {
    auto& u = up[e.first];
    *std::find(u.begin(), u.end(), e.second) = mid;
  };
  for (std::size_t k = 0; k < le.size(); ++k) {
    subdivide(le[k], f.xs[k]);
    up[f.xs[k]] = {le[k].second, k == 0 ? f.m : f.xs[k - 1]};
  }
  for (std::size_t k = 0; k < re.size(); ++k) {
    subdivide(re[k], f.ys[k]);
    up[f.ys[k]] = {k == 0 ? f.m : f.ys[k - 1], re[k].second};
  }
  up[f.m] = {top};

  std::vector<std::string> extra{"m"};
  for (std::size_t k = 0; k < f.xs.size(); ++k) extra.push_back("x" + std::to_string(k + 1));
  for (std::size_t k = 0; k < f.ys.size(); ++k) extra.push_back("y" + std::to_string(k + 1));
  f.diagram = build(total, up, extend_names(d.lattice(), total, extra));
  return f;
}

std::vector<int> minimal_fork_tops(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  std::vector<int> tops, out;
  for (int t = 0; t < int(l.size()); ++t)
    if (d.lower(t).size() >= 3) tops.push_back(t);
  for (int t : tops)
    if (std::none_of(tops.begin(), tops.end(), [&](int s) { return l.lt(s, t); })) out.push_back(t);
  return out;
}

ForkDeletion delete_fork(const PlanarDiagram& d, int top, int middle) {
  const Lattice& l = d.lattice();
  const Poset& p = l.poset();
  const auto& lw = d.lower(top);
  auto it = std::find(lw.begin(), lw.end(), middle);
  if (it == lw.end() || it == lw.begin() || it + 1 == lw.end())
    throw OrderError("middle must be an inner lower cover of the top");
  for (int t = 0; t < int(l.size()); ++t)
    if (l.lt(t, top) && d.lower(t).size() >= 3) throw OrderError("S7 at " + l.name(top) + " is not minimal");
  int al = *(it - 1), ar = *(it + 1);
  int bl = l.meet(al, middle), br = l.meet(middle, ar);
  if (!p.covers(bl, al) || !p.covers(bl, middle) || !p.covers(br, middle) || !p.covers(br, ar) ||
      d.lower(middle) != std::vector<int>{bl, br} || d.upper(middle) != std::vector<int>{top})
    throw OrderError("no cover-preserving S7 at " + l.name(top));

  ForkDeletion r;
  r.m = middle;
  // walk each strip down until its element has a single lower cover
  auto strip = [&](int start, bool left, std::vector<int>& out) {
    int prev = middle;
    for (int x = start;;) {
      const auto& u = d.upper(x);
      if (u.size() != 2 || (left ? u.back() : u.front()) != prev)
        throw OrderError("fork strip is malformed at " + l.name(x));
      out.push_back(x);
      const auto& dn = d.lower(x);
      if (dn.size() == 1) return;
      if (dn.size() != 2) throw OrderError("fork strip is malformed at " + l.name(x));
      prev = x;
      x = left ? dn.front() : dn.back();
    }
  };
  strip(bl, true, r.xs);
  strip(br, false, r.ys);

  const int n = int(l.size());
  std::vector<int> restore(n, -1);  // removed -> element it is replaced by in its lower-side list
  std::vector<bool> removed(n, false);
  removed[middle] = true;
  for (int x : r.xs) {
    removed[x] = true;
    restore[x] = d.upper(x).front();
  }
  for (int y : r.ys) {
    removed[y] = true;
    restore[y] = d.upper(y).back();
  }
  std::vector<int> idx(n, -1);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      idx[v] = int(r.kept.size());
      r.kept.push_back(v);
    }
  std::vector<std::vector<int>> up(r.kept.size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < r.kept.size(); ++k) {
    int v = r.kept[k];
    for (int u : d.upper(v)) {
      if (!removed[u]) up[k].push_back(idx[u]);
      else if (restore[u] >= 0) up[k].push_back(idx[restore[u]]);
    }
    if (!l.names().empty()) names.push_back(l.name(v));
  }
  r.diagram = build(r.kept.size(), up, names);
  int o = l.meet(bl, br);
  r.cell = Cell{idx[o], idx[top], {idx[al]}, {idx[ar]}};

  // the deletion must be undone exactly by inserting the fork again
  ForkInsertion back = insert_fork(r.diagram, r.cell);
  if (back.xs.size() != r.xs.size() || back.ys.size() != r.ys.size())
    throw OrderError("fork at " + l.name(top) + " does not come from a 4-cell insertion");
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = idx[v];
  map[middle] = back.m;
  for (std::size_t k = 0; k < r.xs.size(); ++k) map[r.xs[k]] = back.xs[k];
  for (std::size_t k = 0; k < r.ys.size(); ++k) map[r.ys[k]] = back.ys[k];
  if (!is_order_isomorphism(p, back.diagram.lattice().poset(), map))
    throw OrderError("fork at " + l.name(top) + " does not come from a 4-cell insertion");
  return r;
}

std::vector<int> eyes(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  std::vector<int> out;
  for (int e = 0; e < int(l.size()); ++e) {
    if (!is_doubly_irreducible(l, e)) continue;
    int o = d.lower(e)[0], t = d.upper(e)[0];
    const auto& up = d.upper(o);
    auto it = std::find(up.begin(), up.end(), e);
    if (it != up.begin() && it + 1 != up.end() && l.poset().covers(*(it - 1), t) && l.poset().covers(*(it + 1), t))
      out.push_back(e);
  }
  return out;
}

PlanarDiagram add_eye(const PlanarDiagram& d, const Cell& c) {
  if (!c.is_four()) throw OrderError("eyes go into 4-cells");
  auto [o, cl, cr, top] = c.corners();
  if (!four_cell(d, o, cl, cr, top)) throw OrderError("not a 4-cell of the diagram");
  const int e = int(d.size());
  auto up = d.upper_lists();
  up.push_back({top});
  auto& u = up[o];
  u.insert(std::find(u.begin(), u.end(), cr), e);
  return build(e + 1, up, extend_names(d.lattice(), e + 1, {"e"}));
}

PlanarDiagram remove_element(const PlanarDiagram& d, int x) {
  const Lattice& l = d.lattice();
  if (!is_doubly_irreducible(l, x)) throw OrderError(l.name(x) + " is not doubly irreducible");
  int lo = d.lower(x)[0], hi = d.upper(x)[0];
  std::vector<int> elems, idx(l.size(), -1);
  for (int v = 0; v < int(l.size()); ++v)
    if (v != x) {
      idx[v] = int(elems.size());
      elems.push_back(v);
    }
  Lattice s = l.sublattice(elems);
  std::vector<std::vector<int>> up(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int u : d.upper(elems[k])) {
      if (u != x) up[k].push_back(idx[u]);
      else if (s.poset().covers(idx[lo], idx[hi])) up[k].push_back(idx[hi]);
    }
  return PlanarDiagram(std::move(s), std::move(up));
}

PlanarDiagram slimming(const PlanarDiagram& d) {
  PlanarDiagram cur = d;
  for (auto e = eyes(cur); !e.empty(); e = eyes(cur)) cur = remove_element(cur, e.front());
  return cur;
}

bool NaturalDiagram::steep(CoverPair e) const {
  int di = coords[e.second].first - coords[e.first].first;
  int dj = coords[e.second].second - coords[e.first].second;
  return di > 0 && dj > 0;
}

NaturalDiagram natural_diagram(const PlanarDiagram& d) {
  SPSReport rep = sps_predicates(d);
  if (!rep.sr) throw OrderError("natural diagrams need a slim rectangular lattice");
  const Lattice& l = d.lattice();
  const int n = int(l.size());
  NaturalDiagram nd;
  nd.lc = *rep.lc;
  nd.rc = *rep.rc;
  auto cl = l.interval(l.zero(), nd.lc), cr = l.interval(l.zero(), nd.rc);
  nd.coords.resize(n);
  for (int x = 0; x < n; ++x)
    nd.coords[x] = {position_in_chain(l, cl, l.meet(x, nd.lc)), position_in_chain(l, cr, l.meet(x, nd.rc))};
  std::set<std::pair<int, int>> seen(nd.coords.begin(), nd.coords.end());
  nd.injective = int(seen.size()) == n;
  nd.meet_preserving = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = nd.coords[l.meet(x, y)];
      if (m != std::make_pair(std::min(nd.coords[x].first, nd.coords[y].first),
                              std::min(nd.coords[x].second, nd.coords[y].second)))
        nd.meet_preserving = false;
    }
  nd.bounds_preserved = nd.coords[l.zero()] == std::make_pair(0, 0) &&
                        nd.coords[l.one()] == std::make_pair(int(cl.size()) - 1, int(cr.size()) - 1);
  nd.join_identity = true;
  for (int x = 0; x < n; ++x)
    if (l.join(l.meet(x, nd.lc), l.meet(x, nd.rc)) != x) nd.join_identity = false;
  return nd;
}

std::vector<CoverPair> c1_violations(const PlanarDiagram& d, const NaturalDiagram& nd) {
  std::vector<CoverPair> out;
  for (auto e : d.lattice().poset().cover_pairs()) {
    const auto& dn = d.lower(e.second);
    bool middle = dn.size() >= 3 && e.first != dn.front() && e.first != dn.back();
    if (nd.steep(e) != middle) out.push_back(e);
  }
  return out;
}

StructureDecomposition structure_decompose(const PlanarDiagram& d) {
  if (!sps_predicates(d).sr) throw OrderError("structure decomposition needs a slim rectangular lattice");
  std::vector<ForkDeletion> steps;
  PlanarDiagram cur = d;
  for (auto tops = minimal_fork_tops(cur); !tops.empty(); tops = minimal_fork_tops(cur)) {
    int t = *std::min_element(tops.begin(), tops.end());
    steps.push_back(delete_fork(cur, t, cur.lower(t)[1]));
    cur = steps.back().diagram;
  }
  NaturalDiagram nd = natural_diagram(cur);
  StructureDecomposition s;
  s.rows = std::size_t(nd.coords[nd.lc].first) + 1;
  s.cols = std::size_t(nd.coords[nd.rc].second) + 1;
  if (!nd.injective || cur.size() != s.rows * s.cols) throw std::logic_error("fork-free SR lattice is not a grid");
  // map: current diagram index -> replay index
  std::vector<int> map(cur.size());
  for (std::size_t x = 0; x < cur.size(); ++x)
    map[x] = int(std::size_t(nd.coords[x].first) * s.cols + std::size_t(nd.coords[x].second));
  PlanarDiagram rep = grid_diagram(s.rows, s.cols);
  for (auto st = steps.rbegin(); st != steps.rend(); ++st) {
    auto [o, al, ar, t] = st->cell.corners();
    auto cell = four_cell(rep, map[o], map[al], map[ar], map[t]);
    if (!cell) throw std::logic_error("replayed cell is not a 4-cell");
    ForkInsertion ins = insert_fork(rep, *cell);
    if (ins.xs.size() != st->xs.size() || ins.ys.size() != st->ys.size())
      throw std::logic_error("replayed fork has different strips");
    std::vector<int> pre(st->kept.size() + 1 + st->xs.size() + st->ys.size());
    for (std::size_t k = 0; k < st->kept.size(); ++k) pre[st->kept[k]] = map[k];
    pre[st->m] = ins.m;
    for (std::size_t k = 0; k < st->xs.size(); ++k) pre[st->xs[k]] = ins.xs[k];
    for (std::size_t k = 0; k < st->ys.size(); ++k) pre[st->ys[k]] = ins.ys[k];
    s.forks.push_back(*cell);
    rep = std::move(ins.diagram);
    map = std::move(pre);
  }
  if (!is_order_isomorphism(d.lattice().poset(), rep.lattice().poset(), map))
    throw std::logic_error("replay does not reproduce the input");
  s.replay_to_input.assign(map.size(), -1);
  for (std::size_t x = 0; x < map.size(); ++x) s.replay_to_input[map[x]] = int(x);
  return s;
}

PlanarDiagram replay(const StructureDecomposition& s) {
  PlanarDiagram rep = grid_diagram(s.rows, s.cols);
  for (const auto& c : s.forks) rep = insert_fork(rep, c).diagram;
  return rep;
}

PlanarDiagram random_sr(std::size_t rows, std::size_t cols, std::size_t forks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlanarDiagram d = grid_diagram(rows, cols);
  for (std::size_t k = 0; k < forks; ++k) {
    auto fc = four_cells(d);
    if (fc.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, fc.size() - 1);
    d = insert_fork(d, fc[pick(rng)]).diagram;
  }
  return d;
}

std::vector<std::vector<CoverPair>> trajectories(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  auto edges = l.poset().cover_pairs();
  std::map<CoverPair, int> id;
  for (std::size_t k = 0; k < edges.size(); ++k) id[edges[k]] = int(k);
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](CoverPair a, CoverPair b) { parent[find(id[a])] = find(id[b]); };
  for (const auto& c : four_cells(d)) {
    auto [o, a, b, t] = c.corners();
    unite({o, a}, {b, t});
    unite({o, b}, {a, t});
  }
  // each 4-cell links its lower-left side to its upper-right side and its
  // upper-left side to its lower-right side; following the links orders a
  // trajectory from left to right
  std::map<CoverPair, CoverPair> right_of;
  std::set<CoverPair> has_left;
  for (const auto& c : four_cells(d)) {
    auto [o, a, b, t] = c.corners();
    right_of[{o, a}] = {b, t};
    right_of[{a, t}] = {o, b};
    has_left.insert({b, t});
    has_left.insert({o, b});
  }
  std::map<int, std::vector<CoverPair>> groups;
  for (auto e : edges) groups[find(id[e])].push_back(e);
  std::vector<std::vector<CoverPair>> out;
  for (auto& [k, g] : groups) {
    std::vector<CoverPair> path;
    for (auto e : g)
      if (!has_left.count(e)) path.push_back(e);
    if (path.size() == 1)
      for (auto it = right_of.find(path.back()); it != right_of.end() && path.size() <= g.size();
           it = right_of.find(path.back()))
        path.push_back(it->second);
    out.push_back(path.size() == g.size() ? path : g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CoverPair> top_edge(const PlanarDiagram& d, const std::vector<CoverPair>& t) {
  const Lattice& l = d.lattice();
  for (auto [p, q] : t) {
    const auto& dn = d.lower(q);
    auto it = std::find(dn.begin(), dn.end(), p);
    if (it == dn.begin() || it + 1 == dn.end()) continue;
    int ql = *(it - 1), qr = *(it + 1);
    if (four_cell(d, l.meet(p, ql), ql, p, q) && four_cell(d, l.meet(p, qr), p, qr, q)) return CoverPair{p, q};
  }
  return std::nullopt;
}

RectangularIntervalReport rectangular_interval_check(const PlanarDiagram& d, int o, int i, int a, int b) {
  const Lattice& l = d.lattice();
  if (!l.leq(o, a) || !l.leq(a, i) || !l.leq(o, b) || !l.leq(b, i))
    throw OrderError("a and b must lie in [o, i]");
  if (l.meet(a, b) != o || l.join(a, b) != i) throw OrderError("a and b are not complementary in [o, i]");
  if (!d.left_of(a, b)) throw OrderError("a is not left of b");
  auto elems = l.interval(o, i);
  auto pos = [&](int x) { return int(std::find(elems.begin(), elems.end(), x) - elems.begin()); };
  PlanarDiagram iv = interval_diagram(d, o, i);
  const Lattice& il = iv.lattice();
  SPSReport rep = sps_predicates(iv);
  RectangularIntervalReport r;
  r.sr = rep.sr;
  r.corners_match = rep.lc == pos(a) && rep.rc == pos(b);
  if (!rep.sr) return r;
  // the corollaries speak about the corners of I, which a, b need not be
  const int ca = *rep.lc, cb = *rep.rc;
  auto la = il.interval(il.zero(), ca), lb = il.interval(il.zero(), cb);
  r.chains = is_chain(il, la) && is_chain(il, lb);
  r.lower_boundary_meet_reducible = true;
  for (const auto* side : {&la, &lb})
    for (int x : *side)
      if (x != ca && x != cb && iv.upper(x).size() < 2) r.lower_boundary_meet_reducible = false;
  r.join_identity = true;
  for (int x = 0; x < int(il.size()); ++x)
    if (il.join(il.meet(x, ca), il.meet(x, cb)) != x) r.join_identity = false;
  return r;
}

Coordinatization coordinatize_congruence(const PlanarDiagram& d, const Congruence& a) {
  SPSReport rep = sps_predicates(d);
  if (!rep.rectangular) throw OrderError("coordinatization needs a rectangular lattice");
  const Lattice& l = d.lattice();
  auto cl = l.interval(l.zero(), *rep.lc), cr = l.interval(l.zero(), *rep.rc);
  Coordinatization c;
  c.left = restrict(l, cl, a);
  c.right = restrict(l, cr, a);
  std::vector<std::pair<int, int>> pairs;
  for (const auto* chain : {&cl, &cr})
    for (int x : *chain)
      for (int y : *chain)
        if (x < y && a.related(x, y)) pairs.emplace_back(x, y);
  c.reconstructed = generated(l, pairs);
  c.exact = c.reconstructed == a;
  return c;
}

DiagramGluing glue_diagrams(const PlanarDiagram& k, const PlanarDiagram& l, const std::vector<int>& filter,
                            const std::vector<int>& phi) {
  DiagramGluing out;
  out.gluing = glue(k.lattice(), l.lattice(), filter, phi);
  const auto& g = out.gluing;
  const std::size_t n = g.lattice.size();
  std::vector<int> to_l(n, -1);
  for (int y = 0; y < int(l.size()); ++y) to_l[g.from_l[y]] = y;
  std::vector<std::vector<int>> up(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (to_l[x] >= 0) {
      for (int u : l.upper(to_l[x])) up[x].push_back(g.from_l[u]);
    } else {
      up[x] = k.upper(int(x));
    }
  }
  out.diagram = PlanarDiagram(g.lattice, std::move(up));
  return out;
}

namespace {

struct Corners {
  std::vector<int> upper_left, upper_right, lower_left, lower_right;  // bottom to top
};

Corners rectangular_boundaries(const PlanarDiagram& d, const char* what) {
  SPSReport rep = sps_predicates(d);
  if (!rep.rectangular) throw OrderError(std::string(what) + " is not rectangular");
  Corners c;
  for (int x : d.left_boundary()) (d.lattice().leq(*rep.lc, x) ? c.upper_left : c.lower_left).push_back(x);
  for (int x : d.right_boundary()) (d.lattice().leq(*rep.rc, x) ? c.upper_right : c.lower_right).push_back(x);
  c.lower_left.push_back(*rep.lc);
  c.lower_right.push_back(*rep.rc);
  return c;
}

DiagramGluing glue_boundaries(const PlanarDiagram& lower, const std::vector<int>& filter, const PlanarDiagram& upper,
                              const std::vector<int>& ideal) {
  if (filter.size() != ideal.size()) throw OrderError("facing boundary chains have different lengths");
  return glue_diagrams(lower, upper, filter, ideal);
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = b[a[k]];
  return out;
}

}  // namespace

TripleGluing triple_gluing(const PlanarDiagram& g, const PlanarDiagram& y, const PlanarDiagram& z,
                           const PlanarDiagram& u) {
  auto bg = rectangular_boundaries(g, "top"), by = rectangular_boundaries(y, "left");
  auto bz = rectangular_boundaries(z, "right"), bu = rectangular_boundaries(u, "bottom");
  DiagramGluing x = glue_boundaries(u, bu.upper_left, y, by.lower_right);
  DiagramGluing w = glue_boundaries(z, bz.upper_left, g, bg.lower_right);
  auto bx = rectangular_boundaries(x.diagram, "bottom-left half");
  auto bw = rectangular_boundaries(w.diagram, "top-right half");
  DiagramGluing v = glue_boundaries(x.diagram, bx.upper_right, w.diagram, bw.lower_left);
  TripleGluing t;
  t.diagram = v.diagram;
  t.from_u = compose(x.gluing.from_k, v.gluing.from_k);
  t.from_y = compose(x.gluing.from_l, v.gluing.from_k);
  t.from_z = compose(w.gluing.from_k, v.gluing.from_l);
  t.from_g = compose(w.gluing.from_l, v.gluing.from_l);
  return t;
}

std::array<PlanarDiagram, 4> rectangular_quarters(const PlanarDiagram& d, int x, int y) {
  SPSReport rep = sps_predicates(d);
  if (!rep.rectangular) throw OrderError("quarters need a rectangular lattice");
  const Lattice& l = d.lattice();
  int lc = *rep.lc, rc = *rep.rc;
  if (!d.on_left_boundary(x) || !l.lt(lc, x) || x == l.one()) throw OrderError("x must lie strictly inside C_ul");
  if (!d.on_right_boundary(y) || !l.lt(rc, y) || y == l.one()) throw OrderError("y must lie strictly inside C_ur");
  return {interval_diagram(d, l.meet(x, y), l.one()), interval_diagram(d, l.meet(lc, y), x),
          interval_diagram(d, l.meet(x, rc), y),
          interval_diagram(d, l.zero(), l.join(l.meet(lc, y), l.meet(x, rc)))};
}

std::vector<int> eligible_corners(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  std::vector<int> out;
  auto consider = [&](const std::vector<int>& chain) {
    for (int x : chain)
      if (is_doubly_irreducible(l, x) && std::find(out.begin(), out.end(), x) == out.end() &&
          is_upper_semimodular(remove_element(d, x).lattice()))
        out.push_back(x);
  };
  consider(d.left_boundary());
  consider(d.right_boundary());
  return out;
}

PlanarDiagram remove_corner(const PlanarDiagram& d) {
  auto c = eligible_corners(d);
  if (c.empty()) throw OrderError("no eligible corner");
  return remove_element(d, c.front());
}

PlanarDiagram add_corner(const PlanarDiagram& d, bool left, std::size_t j) {
  auto chain = left ? d.left_boundary() : d.right_boundary();
  if (j + 2 >= chain.size()) throw OrderError("corner position is past the boundary chain");
  const int e = int(d.size());
  auto up = d.upper_lists();
  up.push_back({chain[j + 2]});
  auto& u = up[chain[j]];
  if (left) u.insert(u.begin(), e);
  else u.push_back(e);
  return build(e + 1, up, extend_names(d.lattice(), e + 1, {"k"}));
}

RectangularExtension rectangular_extension(const PlanarDiagram& d) {
  if (d.size() < 3) throw OrderError("rectangular extensions need at least three elements");
  SPSReport rep = sps_predicates(d);
  if (!rep.planar || !rep.semimodular) throw OrderError("rectangular extensions need a planar semimodular lattice");
  const bool keep_slim = rep.slim;
  const std::size_t max_added = d.size();
  std::size_t budget = 200000;
  RectangularExtension out;
  auto rec = [&](auto&& self, const PlanarDiagram& cur, std::vector<int>& added) -> bool {
    if (sps_predicates(cur).rectangular) {
      out.diagram = cur;
      out.added = added;
      return true;
    }
    if (added.size() >= max_added || budget == 0) return false;
    --budget;
    for (bool left : {true, false}) {
      std::size_t len = (left ? cur.left_boundary() : cur.right_boundary()).size();
      for (std::size_t j = 0; j + 2 < len; ++j) {
        PlanarDiagram next = add_corner(cur, left, j);
        if (!is_upper_semimodular(next.lattice())) continue;
        if (keep_slim && !covering_m3s(next.lattice()).empty()) continue;
        if (!planar_ok(next)) continue;
        added.push_back(int(cur.size()));
        if (self(self, next, added)) return true;
        added.pop_back();
      }
    }
    return false;
  };
  std::vector<int> added;
  if (!rec(rec, d, added)) throw OrderError("no rectangular extension by corners found");
  return out;
}

}  // namespace latw
