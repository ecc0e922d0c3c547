#include "latw/lattice.hpp"

#include <algorithm>
#include <set>

namespace latw {

NotALattice::NotALattice(int a_, int b_, bool j)
    : OrderError(std::string("no ") + (j ? "join" : "meet") + " for pair (" + std::to_string(a_) +
                 "," + std::to_string(b_) + ")"),
      a(a_), b(b_), join_missing(j) {}

namespace {

// Fill one bound table.  `lower` selects meet (walk lower covers) or join.
std::vector<int> bound_table(const Poset& p, bool lower) {
  const std::size_t n = p.size();
  std::vector<int> t(n * n, -1);
  std::vector<int> topo = p.topological();
  if (!lower) std::reverse(topo.begin(), topo.end());
  auto below = [&](int x, int y) { return lower ? p.leq(x, y) : p.leq(y, x); };
  auto cone = [&](int x) -> const Bits& { return lower ? p.down(x) : p.up(x); };
  for (std::size_t a = 0; a < n; ++a) {
    for (int b : topo) {
      int& cell = t[a * n + b];
      if (below(b, int(a))) { cell = b; continue; }
      if (below(int(a), b)) { cell = int(a); continue; }
      const auto& next = lower ? p.lower_covers(b) : p.upper_covers(b);
      int cand = -1;
      for (int c : next) {
        int m = t[a * n + c];
        if (cand < 0 || below(cand, m)) cand = m;
      }
      Bits common = cone(int(a)) & cone(b);
      if (cand >= 0 && cone(cand) == common) { cell = cand; continue; }
      for (std::size_t m = common.find_first(); m != Bits::npos; m = common.find_next(m))
        if (cone(int(m)) == common) { cell = int(m); break; }
      if (cell < 0) throw NotALattice(std::min<int>(int(a), b), std::max<int>(int(a), b), !lower);
    }
  }
  return t;
}

}  // namespace

Lattice Lattice::from_poset(Poset p) {
  if (p.size() == 0) throw OrderError("a lattice needs at least one element");
  Lattice l;
  l.meet_ = bound_table(p, true);
  l.join_ = bound_table(p, false);
  auto mins = p.minimal();
  auto maxs = p.maximal();
  l.zero_ = mins.front();
  l.one_ = maxs.front();
  l.p_ = std::move(p);
  return l;
}

Lattice Lattice::from_covers(std::size_t n, const std::vector<CoverPair>& pairs) {
  return from_poset(Poset::from_covers(n, pairs));
}

int Lattice::meet(const std::vector<int>& xs) const {
  int m = one_;
  for (int x : xs) m = meet(m, x);
  return m;
}

int Lattice::join(const std::vector<int>& xs) const {
  int j = zero_;
  for (int x : xs) j = join(j, x);
  return j;
}

std::string Lattice::name(int a) const {
  if (std::size_t(a) < names_.size() && !names_[a].empty()) return names_[a];
  return std::to_string(a);
}

void Lattice::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != size()) throw OrderError("label count does not match size");
  names_ = std::move(names);
}

std::optional<int> Lattice::find(const std::string& nm) const {
  for (std::size_t a = 0; a < size(); ++a)
    if (name(int(a)) == nm) return int(a);
  return std::nullopt;
}

int Lattice::at(const std::string& nm) const {
  auto f = find(nm);
  if (!f) throw OrderError("no element named '" + nm + "'");
  return *f;
}

std::vector<int> Lattice::interval(int a, int b) const {
  std::vector<int> out;
  if (!leq(a, b)) return out;
  Bits s = p_.up(a) & p_.down(b);
  for (std::size_t x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out.push_back(int(x));
  return out;
}

bool Lattice::closed(const std::vector<int>& elems) const {
  Bits in(size());
  for (int x : elems) in.set(x);
  for (int x : elems)
    for (int y : elems)
      if (!in[meet(x, y)] || !in[join(x, y)]) return false;
  return !elems.empty();
}

Lattice Lattice::sublattice(const std::vector<int>& elems) const {
  if (!closed(elems)) throw OrderError("element set is not a sublattice");
  Lattice s = from_poset(p_.induced(elems));
  if (!names_.empty()) {
    std::vector<std::string> nm;
    for (int x : elems) nm.push_back(name(x));
    s.set_names(std::move(nm));
  }
  return s;
}

Lattice dual(const Lattice& l) {
  Lattice d = Lattice::from_poset(dual(l.poset()));
  if (!l.names().empty()) d.set_names(l.names());
  return d;
}

ElementReport irreducibles(const Lattice& l) {
  ElementReport r;
  const Poset& p = l.poset();
  for (std::size_t a = 0; a < l.size(); ++a) {
    int x = int(a);
    if (x != l.zero() && p.lower_covers(x).size() == 1) {
      r.join_irreducibles.push_back(x);
      r.lower_cover_of_ji[x] = p.lower_covers(x).front();
    }
    if (x != l.one() && p.upper_covers(x).size() == 1) {
      r.meet_irreducibles.push_back(x);
      r.upper_cover_of_mi[x] = p.upper_covers(x).front();
    }
  }
  r.atoms = p.upper_covers(l.zero());
  if (l.size() > 1) r.dual_atoms = p.lower_covers(l.one());
  return r;
}

std::vector<int> ji_below(const Lattice& l, int a) {
  std::vector<int> out;
  for (int x : irreducibles(l).join_irreducibles)
    if (l.leq(x, a)) out.push_back(x);
  return out;
}

bool is_distributive(const Lattice& l) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (!l.leq(l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z)))) return false;
  return true;
}

bool is_modular(const Lattice& l) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (!l.lt(x, z)) continue;
      for (int y = 0; y < n; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
    }
  return true;
}

namespace {

bool covers_or_equal(const Lattice& l, int a, int b) { return a == b || l.poset().covers(a, b); }

}  // namespace

bool is_upper_semimodular(const Lattice& l) {
  for (auto [a, b] : l.poset().cover_pairs())
    for (int c = 0; c < int(l.size()); ++c)
      if (!covers_or_equal(l, l.join(a, c), l.join(b, c))) return false;
  return true;
}

bool is_lower_semimodular(const Lattice& l) {
  for (auto [a, b] : l.poset().cover_pairs())
    for (int c = 0; c < int(l.size()); ++c)
      if (!covers_or_equal(l, l.meet(a, c), l.meet(b, c))) return false;
  return true;
}

bool is_meet_semidistributive(const Lattice& l) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int m = l.meet(x, y);
        if (m == l.meet(x, z) && m != l.meet(x, l.join(y, z))) return false;
      }
  return true;
}

bool is_join_semidistributive(const Lattice& l) {
  const int n = int(l.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int j = l.join(x, y);
        if (j == l.join(x, z) && j != l.join(x, l.meet(y, z))) return false;
      }
  return true;
}

std::optional<int> complement_in(const Lattice& l, int x, int lo, int hi) {
  for (int y : l.interval(lo, hi))
    if (l.meet(x, y) == lo && l.join(x, y) == hi) return y;
  return std::nullopt;
}

bool is_complemented(const Lattice& l) {
  for (int x = 0; x < int(l.size()); ++x)
    if (!complement_in(l, x, l.zero(), l.one())) return false;
  return true;
}

std::optional<std::pair<int, int>> sectional_complement_failure(const Lattice& l) {
  const int n = int(l.size());
  for (int a = 0; a < n; ++a) {
    // every b of the form a ∨ c with a ∧ c = 0 has a sectional complement of a
    Bits hit(n);
    for (int c = 0; c < n; ++c)
      if (l.meet(a, c) == l.zero()) hit.set(l.join(a, c));
    Bits miss = l.poset().up(a) - hit;
    if (miss.any()) return std::make_pair(a, int(miss.find_first()));
  }
  return std::nullopt;
}

bool is_sectionally_complemented(const Lattice& l) { return !sectional_complement_failure(l); }

bool is_relatively_complemented(const Lattice& l) {
  const int n = int(l.size());
  std::vector<Bits> hit(n, Bits(n));
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) hit[a].reset();
    for (int y = 0; y < n; ++y) hit[l.meet(x, y)].set(l.join(x, y));
    const Bits& dn = l.poset().down(x);
    for (std::size_t a = dn.find_first(); a != Bits::npos; a = dn.find_next(a))
      if (!l.poset().up(x).is_subset_of(hit[a])) return false;
  }
  return true;
}

bool is_atomistic(const Lattice& l) {
  auto atoms = l.poset().upper_covers(l.zero());
  for (int x = 0; x < int(l.size()); ++x) {
    int j = l.zero();
    for (int a : atoms)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  return true;
}

ClassReport classify(const Lattice& l) {
  ClassReport r;
  r.distributive = is_distributive(l);
  r.modular = is_modular(l);
  r.upper_semimodular = is_upper_semimodular(l);
  r.lower_semimodular = is_lower_semimodular(l);
  r.join_semidistributive = is_join_semidistributive(l);
  r.meet_semidistributive = is_meet_semidistributive(l);
  r.complemented = is_complemented(l);
  r.sectionally_complemented = is_sectionally_complemented(l);
  r.relatively_complemented = is_relatively_complemented(l);
  r.atomistic = is_atomistic(l);
  return r;
}

std::optional<std::vector<int>> find_forbidden_sublattice(const Lattice& l, Pattern pat) {
  const int n = int(l.size());
  if (pat == Pattern::N5) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!l.lt(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          if (!l.poset().parallel(a, c)) continue;
          if (l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c))
            return std::vector<int>{l.meet(a, c), a, b, c, l.join(a, c)};
        }
      }
    return std::nullopt;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!l.poset().parallel(a, b)) continue;
      int o = l.meet(a, b), i = l.join(a, b);
      for (int c = b + 1; c < n; ++c) {
        if (!l.poset().parallel(a, c) || !l.poset().parallel(b, c)) continue;
        if (l.meet(a, c) == o && l.meet(b, c) == o && l.join(a, c) == i && l.join(b, c) == i)
          return std::vector<int>{o, a, b, c, i};
      }
    }
  return std::nullopt;
}

std::vector<int> sublattice_closure(const Lattice& l, const std::vector<int>& h) {
  Bits in(l.size());
  std::vector<int> cur;
  for (int x : h)
    if (!in[x]) { in.set(x); cur.push_back(x); }
  for (std::size_t i = 0; i < cur.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (int z : {l.meet(cur[i], cur[j]), l.join(cur[i], cur[j])})
        if (!in[z]) { in.set(z); cur.push_back(z); }
    }
  std::sort(cur.begin(), cur.end());
  return cur;
}

int DownSetLattice::index_of(const Bits& s) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return int(i);
  return -1;
}

DownSetLattice down_set_lattice(const Poset& p) {
  const std::size_t n = p.size();
  std::set<Bits> seen;
  std::vector<Bits> todo{Bits(n)};
  seen.insert(todo.front());
  while (!todo.empty()) {
    Bits s = todo.back();
    todo.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (s[x]) continue;
      bool ok = true;
      for (int w : p.lower_covers(int(x))) ok = ok && s[w];
      if (!ok) continue;
      Bits t = s;
      t.set(x);
      if (seen.insert(t).second) todo.push_back(t);
    }
  }
  DownSetLattice d;
  d.sets.assign(seen.begin(), seen.end());
  std::stable_sort(d.sets.begin(), d.sets.end(),
                   [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  const auto& s = d.sets;
  d.lattice = Lattice::from_poset(
      Poset::from_relation(s.size(), [&](int a, int b) { return s[a].is_subset_of(s[b]); }));
  return d;
}

BirkhoffIso birkhoff_iso(const Lattice& l) {
  if (!is_distributive(l)) throw OrderError("lattice is not distributive");
  BirkhoffIso b;
  b.ji = irreducibles(l).join_irreducibles;
  b.ji_poset = l.poset().induced(b.ji);
  b.dn = down_set_lattice(b.ji_poset);
  for (std::size_t a = 0; a < l.size(); ++a) {
    Bits below(b.ji.size());
    for (std::size_t k = 0; k < b.ji.size(); ++k)
      if (l.leq(b.ji[k], int(a))) below.set(k);
    b.map.push_back(b.dn.index_of(below));
  }
  return b;
}

std::optional<HomFailure> check_bounded_hom(const Lattice& d, const Lattice& e,
                                            const std::vector<int>& phi) {
  if (phi.size() != d.size()) return HomFailure{-1, -1, "map has wrong length"};
  for (std::size_t a = 0; a < d.size(); ++a)
    if (phi[a] < 0 || std::size_t(phi[a]) >= e.size())
      return HomFailure{int(a), -1, "image out of range"};
  if (phi[d.zero()] != e.zero()) return HomFailure{d.zero(), -1, "zero not preserved"};
  if (phi[d.one()] != e.one()) return HomFailure{d.one(), -1, "unit not preserved"};
  for (int a = 0; a < int(d.size()); ++a)
    for (int b = a + 1; b < int(d.size()); ++b) {
      if (phi[d.meet(a, b)] != e.meet(phi[a], phi[b])) return HomFailure{a, b, "meet not preserved"};
      if (phi[d.join(a, b)] != e.join(phi[a], phi[b])) return HomFailure{a, b, "join not preserved"};
    }
  return std::nullopt;
}

bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map) {
  return is_order_isomorphism(a.poset(), b.poset(), map);
}

std::vector<int> ji_map(const Lattice& d, const Lattice& e, const std::vector<int>& phi) {
  if (!is_distributive(d) || !is_distributive(e)) throw OrderError("duality needs distributive lattices");
  if (auto f = check_bounded_hom(d, e, phi))
    throw OrderError("not a bounded homomorphism: " + f->what + " at (" + std::to_string(f->a) +
                     "," + std::to_string(f->b) + ")");
  std::vector<int> out;
  for (int x : irreducibles(e).join_irreducibles) {
    int m = d.one();
    for (int y = 0; y < int(d.size()); ++y)
      if (e.leq(x, phi[y])) m = d.meet(m, y);
    out.push_back(m);
  }
  return out;
}

std::vector<int> hom_from_ji_map(const Lattice& d, const Lattice& e, const std::vector<int>& psi) {
  auto je = irreducibles(e).join_irreducibles;
  if (psi.size() != je.size()) throw OrderError("map has wrong length");
  std::vector<int> phi(d.size());
  for (int y = 0; y < int(d.size()); ++y) {
    int j = e.zero();
    for (std::size_t k = 0; k < je.size(); ++k)
      if (d.leq(psi[k], y)) j = e.join(j, je[k]);
    phi[y] = j;
  }
  return phi;
}

std::optional<int> pseudocomplement(const Lattice& l, int a) {
  int j = l.zero();
  for (int x = 0; x < int(l.size()); ++x)
    if (l.meet(a, x) == l.zero()) j = l.join(j, x);
  if (l.meet(a, j) != l.zero()) return std::nullopt;
  return j;
}

bool is_prime_ideal(const Lattice& l, const Bits& p) {
  const int n = int(l.size());
  if (p.none() || p.count() == l.size()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p[x] && l.leq(y, x) && !p[y]) return false;
      if (p[x] && p[y] && !p[l.join(x, y)]) return false;
      if (p[l.meet(x, y)] && !p[x] && !p[y]) return false;
    }
  return true;
}

}  // namespace latw
