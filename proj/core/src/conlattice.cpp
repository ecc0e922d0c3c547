#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "latw/congruence.hpp"

namespace latw {

std::vector<Congruence> ji_congruences(const Lattice& l) {
  // con(p) for a prime p = [x,y] equals con(a_*, a) for a minimal a <= y, a !<= x.
  std::vector<Congruence> out;
  auto er = irreducibles(l);
  for (int a : er.join_irreducibles) {
    Congruence c = principal(l, er.lower_cover_of_ji.at(a), a);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset ji_order(const std::vector<Congruence>& ji) {
  return Poset::from_relation(ji.size(), [&](int a, int b) { return ji[a].refines(ji[b]); });
}

namespace {

int minimal_containing(const std::vector<Congruence>& ji, int x, int y) {
  int best = -1;
  for (std::size_t k = 0; k < ji.size(); ++k) {
    if (!ji[k].related(x, y)) continue;
    if (best < 0 || ji[k].refines(ji[best])) best = int(k);
  }
  return best;
}

}  // namespace

int ConLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || *it != c) return -1;
  return int(it - congruences.begin());
}

ConLattice con_lattice(const Lattice& l) {
  const std::size_t n = l.size();
  ConLattice r;
  std::vector<Congruence> ji = ji_congruences(l);
  Poset jp = ji_order(ji);
  const std::size_t k = ji.size();

  // all joins of down sets of J(Con L), depth first in topological order
  std::vector<int> topo = jp.topological();
  std::vector<Congruence> found;
  Bits chosen(k);
  std::function<void(std::size_t, const Congruence&)> walk = [&](std::size_t i, const Congruence& cur) {
    if (i == k) {
      found.push_back(cur);
      return;
    }
    int e = topo[i];
    walk(i + 1, cur);
    bool ok = true;
    for (int w : jp.lower_covers(e)) ok = ok && chosen[w];
    if (!ok) return;
    chosen.set(e);
    walk(i + 1, cong_join(cur, ji[e]));
    chosen.reset(e);
  };
  walk(0, Congruence::zero(n));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  r.congruences = std::move(found);

  for (const auto& c : r.congruences) {
    Bits s(k);
    for (std::size_t j = 0; j < k; ++j)
      if (ji[j].refines(c)) s.set(j);
    r.ji_sets.push_back(std::move(s));
  }
  const auto& sets = r.ji_sets;
  r.lattice = Lattice::from_poset(Poset::from_relation(
      r.congruences.size(), [&](int a, int b) { return sets[a].is_subset_of(sets[b]); }));
  r.zero = r.index_of(Congruence::zero(n));
  r.one = r.index_of(Congruence::one(n));
  for (const auto& c : ji) r.ji.push_back(r.index_of(c));
  r.ji_poset = jp;

  r.primes = l.poset().cover_pairs();
  for (auto [x, y] : r.primes) r.prime_class.push_back(minimal_containing(ji, x, y));

  // con(a,b) is the join of con over the steps of any maximal chain in [a,b]
  std::map<Bits, int> by_set;
  for (std::size_t i = 0; i < sets.size(); ++i) by_set.emplace(sets[i], int(i));
  std::map<CoverPair, int> step_class;
  for (std::size_t i = 0; i < r.primes.size(); ++i) step_class[r.primes[i]] = r.prime_class[i];
  r.principal.assign(r.congruences.size(), false);
  r.principal[r.zero] = true;
  for (int a = 0; a < int(n); ++a)
    for (int b = 0; b < int(n); ++b) {
      if (!l.lt(a, b)) continue;
      Bits d(k);
      int c = a;
      while (c != b) {
        int u = -1;
        for (int v : l.poset().upper_covers(c))
          if (l.leq(v, b)) { u = v; break; }
        int cls = step_class.at({c, u});
        d |= jp.down(cls);
        c = u;
      }
      auto it = by_set.find(d);
      if (it != by_set.end()) r.principal[it->second] = true;
    }
  return r;
}

bool prime_forces(const Lattice& l, CoverPair p, CoverPair q) {
  return principal(l, p.first, p.second).related(q.first, q.second);
}

Quotient quotient(const Lattice& l, const Congruence& a) {
  if (!is_congruence(l, a)) throw OrderError("partition is not a congruence");
  auto blocks = a.blocks();
  Quotient q;
  q.map = a.signature();
  auto le = [&](int x, int y) {
    int rx = blocks[x].front(), ry = blocks[y].front();
    return a.block(l.join(rx, ry)) == y;
  };
  q.lattice = Lattice::from_poset(Poset::from_relation(blocks.size(), le));
  std::vector<std::string> names;
  for (const auto& b : blocks) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "+" : "") + l.name(b[i]);
    names.push_back(s);
  }
  q.lattice.set_names(std::move(names));
  return q;
}

bool quotient_correspondence_holds(const Lattice& l, const Congruence& a) {
  Quotient q = quotient(l, a);
  ConLattice cl = con_lattice(l);
  ConLattice cq = con_lattice(q.lattice);
  std::vector<int> upper, image;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Congruence& b = cl.congruences[i];
    if (!a.refines(b)) continue;
    std::vector<int> s(q.lattice.size());
    for (std::size_t x = 0; x < l.size(); ++x) s[q.map[x]] = b.block(int(x));
    int j = cq.index_of(Congruence(std::move(s)));
    if (j < 0) return false;
    upper.push_back(int(i));
    image.push_back(j);
  }
  if (upper.size() != cq.size()) return false;
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < upper.size(); ++i)
    for (std::size_t j = 0; j < upper.size(); ++j)
      if (cl.lattice.leq(upper[i], upper[j]) != cq.lattice.leq(image[i], image[j])) return false;
  return true;
}

Congruence restrict(const Lattice& l, const std::vector<int>& k, const Congruence& a) {
  (void)l;
  std::vector<int> s;
  for (int x : k) s.push_back(a.block(x));
  return Congruence(std::move(s));
}

Congruence extend(const Lattice& l, const std::vector<int>& k, const Congruence& a) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& b : a.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) pairs.emplace_back(k[b[0]], k[b[i]]);
  return generated(l, pairs);
}

ExtensionClass extension_class_by_maps(const Lattice& l, const std::vector<int>& k) {
  Lattice kl = l.sublattice(k);
  ExtensionClass e;
  e.reflecting = true;
  for (const auto& b : con_lattice(kl).congruences)
    if (restrict(l, k, extend(l, k, b)) != b) { e.reflecting = false; break; }
  e.determining = true;
  for (const auto& a : con_lattice(l).congruences)
    if (extend(l, k, restrict(l, k, a)) != a) { e.determining = false; break; }
  e.preserving = e.reflecting && e.determining;
  return e;
}

ExtensionClass extension_class_by_primes(const Lattice& l, const std::vector<int>& k) {
  Lattice kl = l.sublattice(k);
  auto kp = kl.poset().cover_pairs();
  std::vector<Congruence> in_l, in_k;
  for (auto [x, y] : kp) {
    in_l.push_back(principal(l, k[x], k[y]));
    in_k.push_back(principal(kl, x, y));
  }
  ExtensionClass e;
  e.reflecting = true;
  for (std::size_t i = 0; i < kp.size() && e.reflecting; ++i)
    for (std::size_t j = 0; j < kp.size(); ++j) {
      auto [x, y] = kp[j];
      if (in_l[i].related(k[x], k[y]) && !in_k[i].related(x, y)) { e.reflecting = false; break; }
    }
  e.determining = true;
  for (auto [x, y] : l.poset().cover_pairs()) {
    Congruence c = principal(l, x, y);
    if (std::find(in_l.begin(), in_l.end(), c) == in_l.end()) { e.determining = false; break; }
  }
  e.preserving = e.reflecting && e.determining;
  return e;
}

ExtensionClass extension_class(const Lattice& l, const std::vector<int>& k) {
  auto a = extension_class_by_maps(l, k);
  auto b = extension_class_by_primes(l, k);
  if (a.reflecting != b.reflecting || a.determining != b.determining)
    throw std::logic_error("extension_class: map and prime-interval computations disagree");
  return a;
}

Geometry congruence_geometry(const Lattice& l, const Congruence& a) {
  Geometry g;
  auto blocks = a.blocks();
  g.uniform = std::all_of(blocks.begin(), blocks.end(),
                          [&](const auto& b) { return b.size() == blocks.front().size(); });
  g.isoform = g.uniform;
  if (g.isoform) {
    Poset first = l.poset().induced(blocks.front());
    for (std::size_t i = 1; i < blocks.size() && g.isoform; ++i)
      g.isoform = are_isomorphic(first, l.poset().induced(blocks[i])).has_value();
  }
  g.regular = std::all_of(blocks.begin(), blocks.end(),
                          [&](const auto& b) { return collapse_set(l, b) == a; });
  return g;
}

LatticeGeometry lattice_geometry(const Lattice& l) {
  LatticeGeometry g;
  for (const auto& c : con_lattice(l).congruences) {
    auto x = congruence_geometry(l, c);
    g.uniform = g.uniform && x.uniform;
    g.isoform = g.isoform && x.isoform;
    g.regular = g.regular && x.regular;
  }
  return g;
}

Subdirect subdirect(const Lattice& l) {
  Subdirect s;
  ConLattice cl = con_lattice(l);
  const Poset& cp = cl.lattice.poset();
  if (l.size() > 1) {
    s.simple = cl.size() == 2;
    const auto& atoms = cp.upper_covers(cl.zero);
    s.subdirectly_irreducible = atoms.size() == 1;
    if (s.subdirectly_irreducible) s.base = cl.congruences[atoms.front()];
  }
  for (std::size_t i = 0; i < cl.size(); ++i)
    if (int(i) != cl.one && cp.upper_covers(int(i)).size() == 1)
      s.meet_irreducible.push_back(cl.congruences[i]);
  s.decomposition = s.meet_irreducible;
  // x -> (x/γ_i) must be one-to-one
  std::map<std::vector<int>, int> seen;
  bool injective = true;
  for (int x = 0; x < int(l.size()); ++x) {
    std::vector<int> t;
    for (const auto& g : s.decomposition) t.push_back(g.block(x));
    if (!seen.emplace(t, x).second) injective = false;
  }
  Congruence m = Congruence::zero(l.size());
  if (!s.decomposition.empty()) {
    m = s.decomposition.front();
    for (const auto& g : s.decomposition) m = cong_meet(m, g);
  }
  s.embedding_verified = injective && m.is_zero();
  return s;
}

namespace {

// Breadth-first reachability over intervals; `step` lists successors of [x,y].
template <class Step>
bool reachable(const Lattice& l, int a, int b, int c, int d, Step step) {
  const int n = int(l.size());
  std::vector<char> seen(std::size_t(n) * n, 0);
  std::deque<std::pair<int, int>> q{{a, b}};
  seen[std::size_t(a) * n + b] = 1;
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    if (x == c && y == d) return true;
    step(x, y, [&](int u, int v) {
      char& s = seen[std::size_t(u) * n + v];
      if (!s) { s = 1; q.emplace_back(u, v); }
    });
  }
  return false;
}

}  // namespace

IntervalRelations interval_relations(const Lattice& l, int a, int b, int c, int d) {
  if (!l.leq(a, b) || !l.leq(c, d)) throw OrderError("interval endpoints out of order");
  const int n = int(l.size());
  IntervalRelations r;
  r.perspective_up = a == l.meet(b, c) && d == l.join(b, c);
  r.perspective_dn = b == l.join(a, d) && c == l.meet(a, d);
  r.cong_perspective_up = d == l.join(b, c) && l.leq(a, c);
  r.cong_perspective_dn = c == l.meet(a, d) && l.leq(d, b);
  r.projective = reachable(l, a, b, c, d, [&](int x, int y, auto push) {
    for (int u = 0; u < n; ++u)
      if (l.meet(y, u) == x) push(u, l.join(y, u));
    for (int v = 0; v < n; ++v)
      if (l.join(x, v) == y) push(l.meet(x, v), v);
  });
  r.cong_projective = reachable(l, a, b, c, d, [&](int x, int y, auto push) {
    for (int u = 0; u < n; ++u)
      if (l.leq(x, u)) push(u, l.join(y, u));
    for (int v = 0; v < n; ++v)
      if (l.leq(v, y)) push(l.meet(x, v), v);
  });
  return r;
}

}  // namespace latw
