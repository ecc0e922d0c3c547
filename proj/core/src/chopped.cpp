#include "latw/chopped.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace latw {

ChoppedLattice ChoppedLattice::from_poset(Poset p) {
  ChoppedLattice m;
  const std::size_t n = p.size();
  if (n == 0) throw OrderError("a chopped lattice is nonempty");
  m.meet_.assign(n * n, -1);
  m.join_.assign(n * n, -1);
  for (int a = 0; a < int(n); ++a)
    for (int b = a; b < int(n); ++b) {
      Bits lower = p.down(a) & p.down(b);
      int g = -1;
      for (auto x = lower.find_first(); x != Bits::npos; x = lower.find_next(x))
        if (p.down(int(x)) == lower) g = int(x);
      if (g < 0) throw NotALattice(a, b, false);
      m.meet_[a * n + b] = m.meet_[b * n + a] = g;
      Bits upper = p.up(a) & p.up(b);
      for (auto x = upper.find_first(); x != Bits::npos; x = upper.find_next(x))
        if (p.up(int(x)) == upper) m.join_[a * n + b] = m.join_[b * n + a] = int(x);
    }
  m.zero_ = p.minimal().front();
  m.max_ = p.maximal();
  for (int top : m.max_) {
    std::vector<int> elems;
    for (int x = 0; x < int(n); ++x)
      if (p.leq(x, top)) elems.push_back(x);
    m.pieces_.push_back(Lattice::from_poset(p.induced(elems)));
    m.piece_elems_.push_back(std::move(elems));
  }
  m.p_ = std::move(p);
  return m;
}

int ChoppedLattice::piece_index(std::size_t k, int x) const {
  const auto& e = piece_elems_[k];
  auto it = std::lower_bound(e.begin(), e.end(), x);
  return it != e.end() && *it == x ? int(it - e.begin()) : -1;
}

std::string ChoppedLattice::name(int a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

void ChoppedLattice::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != size()) throw OrderError("wrong number of names");
  names_ = std::move(names);
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (names_.empty()) continue;
    std::vector<std::string> local;
    for (int x : piece_elems_[k]) local.push_back(names_[x]);
    pieces_[k].set_names(std::move(local));
  }
}

int ChoppedLattice::at(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return int(i);
  throw OrderError("no element named " + name);
}

Merge merge(const std::vector<Lattice>& pieces, const std::vector<std::vector<int>>& ids) {
  if (pieces.empty() || pieces.size() != ids.size()) throw OrderError("merge needs one id list per piece");
  int n = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (ids[k].size() != pieces[k].size()) throw OrderError("id list has the wrong length");
    for (int g : ids[k]) n = std::max(n, g + 1);
  }
  std::vector<CoverPair> pairs;
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    for (int g : ids[k]) used[g] = true;
    for (auto [a, b] : pieces[k].poset().cover_pairs()) pairs.emplace_back(ids[k][a], ids[k][b]);
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw OrderError("merge ids leave gaps");
  Poset p = Poset::from_covers(n, pairs);
  // each piece must be exactly the ideal below its top, with its own order
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Lattice& c = pieces[k];
    Bits mine(n);
    for (int g : ids[k]) mine.set(g);
    if (p.down(ids[k][c.one()]) != mine) throw OrderError("shared part is not an ideal of every piece");
    for (int a = 0; a < int(c.size()); ++a)
      for (int b = 0; b < int(c.size()); ++b)
        if (c.leq(a, b) != p.leq(ids[k][a], ids[k][b]))
          throw OrderError("identification is not an isomorphism of the shared ideals");
  }
  Merge out;
  out.chopped = ChoppedLattice::from_poset(std::move(p));
  bool named = std::any_of(pieces.begin(), pieces.end(), [](const Lattice& l) { return !l.names().empty(); });
  if (named) {
    std::vector<std::string> names(n);
    for (std::size_t k = pieces.size(); k-- > 0;)
      for (int a = 0; a < int(pieces[k].size()); ++a) names[ids[k][a]] = pieces[k].name(a);
    out.chopped.set_names(std::move(names));
  }
  out.ids = ids;
  return out;
}

Merge merge(const Lattice& c, const Lattice& d, const std::vector<std::pair<int, int>>& shared) {
  std::vector<std::vector<int>> ids(2);
  for (int x = 0; x < int(c.size()); ++x) ids[0].push_back(x);
  ids[1].assign(d.size(), -1);
  for (auto [x, y] : shared) {
    if (ids[1][y] >= 0) throw OrderError("element of D identified twice");
    ids[1][y] = x;
  }
  int next = int(c.size());
  for (int& g : ids[1])
    if (g < 0) g = next++;
  return merge({c, d}, ids);
}

bool is_compatible(const ChoppedLattice& m, const std::vector<int>& v) {
  const auto& mx = m.max_elements();
  if (v.size() != mx.size()) return false;
  for (std::size_t i = 0; i < mx.size(); ++i) {
    if (!m.leq(v[i], mx[i])) return false;
    for (std::size_t j = 0; j < mx.size(); ++j)
      if (m.meet(v[i], mx[j]) != m.meet(v[j], mx[i])) return false;
  }
  return true;
}

std::vector<int> compatible_closure(const ChoppedLattice& m, std::vector<int> v) {
  const auto& mx = m.max_elements();
  // raise v_i to cover v_j ∧ m_i until nothing moves
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < mx.size(); ++i)
      for (std::size_t j = 0; j < mx.size(); ++j) {
        int t = m.meet(v[j], mx[i]);
        if (m.leq(t, v[i])) continue;
        v[i] = m.join(v[i], t);
        moved = true;
      }
  }
  return v;
}

Bits ideal_of_vector(const ChoppedLattice& m, const std::vector<int>& v) {
  Bits s(m.size());
  for (int x : v) s |= m.poset().down(x);
  return s;
}

std::vector<int> vector_of_ideal(const ChoppedLattice& m, const Bits& ideal) {
  std::vector<int> v;
  for (int top : m.max_elements()) {
    int best = m.zero();
    Bits part = ideal & m.poset().down(top);
    for (auto x = part.find_first(); x != Bits::npos; x = part.find_next(x)) best = m.join(best, int(x));
    v.push_back(best);
  }
  return v;
}

bool is_ideal(const ChoppedLattice& m, const Bits& s) {
  if (s.none() || m.poset().down_closure(s) != s) return false;
  for (auto a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    for (auto b = s.find_first(); b != Bits::npos; b = s.find_next(b)) {
      int j = m.join(int(a), int(b));
      if (j >= 0 && !s[j]) return false;
    }
  return true;
}

Bits ideal_join_by_iteration(const ChoppedLattice& m, const Bits& i, const Bits& j) {
  Bits u = i | j;
  while (true) {
    Bits next = u;
    for (auto a = u.find_first(); a != Bits::npos; a = u.find_next(a))
      for (auto b = u.find_next(a); b != Bits::npos; b = u.find_next(b)) {
        int c = m.join(int(a), int(b));
        if (c >= 0) next |= m.poset().down(c);
      }
    if (next == u) return u;
    u = std::move(next);
  }
}

int IdealLattice::index_of(const std::vector<int>& v) const {
  auto it = std::lower_bound(vectors.begin(), vectors.end(), v);
  return it != vectors.end() && *it == v ? int(it - vectors.begin()) : -1;
}

IdealLattice ideal_lattice(const ChoppedLattice& m) {
  const auto& mx = m.max_elements();
  const std::size_t k = mx.size();
  IdealLattice out;
  std::vector<std::vector<int>> options(k);
  for (std::size_t i = 0; i < k; ++i) options[i] = m.piece_elements(i);
  std::vector<int> v(k);
  // candidate lists are ascending, so vectors come out in lexicographic order
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      out.vectors.push_back(v);
      return;
    }
    for (int x : options[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = m.meet(x, mx[j]) == m.meet(v[j], mx[i]);
      if (!ok) continue;
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  const auto& vs = out.vectors;
  out.lattice = Lattice::from_poset(Poset::from_relation(vs.size(), [&](int a, int b) {
    for (std::size_t i = 0; i < k; ++i)
      if (!m.leq(vs[a][i], vs[b][i])) return false;
    return true;
  }));
  if (!m.names().empty()) {
    std::vector<std::string> names;
    for (const auto& w : vs) {
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + m.name(w[i]);
      names.push_back(s + ")");
    }
    out.lattice.set_names(std::move(names));
  }
  for (int x = 0; x < int(m.size()); ++x) out.embed.push_back(out.index_of(vector_of_ideal(m, m.poset().down(x))));
  return out;
}

bool is_chopped_congruence(const ChoppedLattice& m, const Congruence& a) {
  const int n = int(m.size());
  if (int(a.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !a.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!a.related(m.meet(x, z), m.meet(y, z))) return false;
        int u = m.join(x, z), v = m.join(y, z);
        if (u >= 0 && v >= 0 && !a.related(u, v)) return false;
      }
    }
  return true;
}

namespace {

// A piece containing x.
std::size_t home(const ChoppedLattice& m, int x) {
  for (std::size_t k = 0; k < m.max_elements().size(); ++k)
    if (m.leq(x, m.max_elements()[k])) return k;
  throw std::logic_error("element below no maximal element");
}

Congruence from_relation(int n, const std::function<bool(int, int)>& rel) {
  std::vector<int> s(n, -1);
  for (int a = 0; a < n; ++a)
    if (s[a] < 0)
      for (int b = a; b < n; ++b)
        if (rel(a, b)) s[b] = a;
  Congruence c(s);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c.related(a, b) != rel(a, b)) throw std::logic_error("relation is not an equivalence");
  return c;
}

}  // namespace

Congruence congruence_from_vector(const ChoppedLattice& m, const std::vector<Congruence>& v) {
  auto in = [&](std::size_t k, int x, int y) { return v[k].related(m.piece_index(k, x), m.piece_index(k, y)); };
  return from_relation(int(m.size()), [&](int x, int y) {
    int w = m.meet(x, y);
    return in(home(m, x), x, w) && in(home(m, y), y, w);
  });
}

std::vector<Congruence> restriction_vector(const ChoppedLattice& m, const Congruence& a) {
  std::vector<Congruence> out;
  for (std::size_t k = 0; k < m.max_elements().size(); ++k) {
    std::vector<int> s;
    for (int x : m.piece_elements(k)) s.push_back(a.block(x));
    out.emplace_back(std::move(s));
  }
  return out;
}

ChoppedCongruences chopped_congruences(const ChoppedLattice& m) {
  const auto& mx = m.max_elements();
  const std::size_t k = mx.size();
  std::vector<std::vector<Congruence>> options;
  for (std::size_t i = 0; i < k; ++i) options.push_back(con_lattice(m.piece(i)).congruences);
  // shared[i][j]: elements of id(m_i ∧ m_j)
  std::vector<std::vector<std::vector<int>>> shared(k, std::vector<std::vector<int>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (int x = 0; x < int(m.size()); ++x)
        if (m.leq(x, m.meet(mx[i], mx[j]))) shared[i][j].push_back(x);
  ChoppedCongruences out;
  std::vector<Congruence> v(k);
  std::vector<std::vector<Congruence>> vectors;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      vectors.push_back(v);
      return;
    }
    for (const auto& g : options[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        for (int x : shared[i][j]) {
          for (int y : shared[i][j])
            if (g.related(m.piece_index(i, x), m.piece_index(i, y)) !=
                v[j].related(m.piece_index(j, x), m.piece_index(j, y))) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
      if (!ok) continue;
      v[i] = g;
      rec(i + 1);
    }
  };
  rec(0);
  std::vector<std::pair<Congruence, std::vector<Congruence>>> rows;
  for (auto& w : vectors) rows.emplace_back(congruence_from_vector(m, w), std::move(w));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, w] : rows) {
    out.congruences.push_back(std::move(c));
    out.vectors.push_back(std::move(w));
  }
  return out;
}

Congruence ideal_extension(const ChoppedLattice& m, const IdealLattice& id, const Congruence& a) {
  const int n = int(m.size());
  std::map<Bits, int> classes;
  std::vector<int> s;
  for (const auto& v : id.vectors) {
    Bits ideal = ideal_of_vector(m, v), sat(n);
    for (int y = 0; y < n; ++y)
      for (auto x = ideal.find_first(); x != Bits::npos; x = ideal.find_next(x))
        if (a.related(int(x), y)) {
          sat.set(y);
          break;
        }
    s.push_back(classes.emplace(sat, int(classes.size())).first->second);
  }
  return Congruence(std::move(s));
}

}  // namespace latw

namespace latw {

namespace {

Lattice named_lattice(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& covers) {
  auto idx = [&](const std::string& s) { return int(std::find(names.begin(), names.end(), s) - names.begin()); };
  std::vector<CoverPair> pairs;
  for (const auto& [a, b] : covers) pairs.emplace_back(idx(a), idx(b));
  Lattice l = Lattice::from_covers(names.size(), pairs);
  l.set_names(std::move(names));
  return l;
}

}  // namespace

Merge sc_counterexample() {
  Lattice l1 = named_lattice({"0", "p", "q", "u", "a", "r", "c", "p'", "e", "m1"},
                             {{"0", "a"}, {"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "u"}, {"q", "u"},
                              {"p", "c"}, {"r", "c"}, {"a", "p'"}, {"r", "p'"}, {"a", "e"}, {"u", "e"},
                              {"c", "m1"}, {"p'", "m1"}, {"e", "m1"}});
  Lattice l2 = named_lattice({"0", "p", "q", "u", "b", "s", "d", "q'", "f", "m2"},
                             {{"0", "b"}, {"0", "p"}, {"0", "q"}, {"0", "s"}, {"p", "u"}, {"q", "u"},
                              {"q", "d"}, {"s", "d"}, {"b", "q'"}, {"s", "q'"}, {"b", "f"}, {"u", "f"},
                              {"d", "m2"}, {"q'", "m2"}, {"f", "m2"}});
  return merge(l1, l2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

Merge atom_merge(const Lattice& a, int atom_a, const Lattice& b, int atom_b) {
  if (!a.poset().covers(a.zero(), atom_a) || !b.poset().covers(b.zero(), atom_b))
    throw OrderError("atom_merge needs an atom of each lattice");
  return merge(a, b, {{a.zero(), b.zero()}, {atom_a, atom_b}});
}

}  // namespace latw
