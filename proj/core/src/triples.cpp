#include "latw/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace latw {

bool is_boolean_triple(const Lattice& l, const Triple& t) {
  auto [x, y, z] = t;
  return x == l.meet(l.join(x, y), l.join(x, z)) && y == l.meet(l.join(y, x), l.join(y, z)) &&
         z == l.meet(l.join(z, x), l.join(z, y));
}

bool is_balanced(const Lattice& l, const Triple& t) {
  auto [x, y, z] = t;
  return l.meet(x, y) == l.meet(y, z) && l.meet(y, z) == l.meet(z, x);
}

Triple triple_closure(const Lattice& l, const Triple& t) {
  auto [x, y, z] = t;
  int u = l.join(x, y), v = l.join(x, z), w = l.join(y, z);
  return {l.meet(u, v), l.meet(u, w), l.meet(v, w)};
}

Triple triple_join(const Lattice& l, const Triple& s, const Triple& t) {
  return triple_closure(l, {l.join(s[0], t[0]), l.join(s[1], t[1]), l.join(s[2], t[2])});
}

Triple triple_meet(const Lattice& l, const Triple& s, const Triple& t) {
  return {l.meet(s[0], t[0]), l.meet(s[1], t[1]), l.meet(s[2], t[2])};
}

int Triples::index_of(const Triple& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  return it != triples.end() && *it == t ? int(it - triples.begin()) : -1;
}

namespace {

Triples build(const Lattice& l, const Triple& lo, const Triple& hi) {
  const int n = int(l.size());
  auto leq3 = [&](const Triple& s, const Triple& t) {
    return l.leq(s[0], t[0]) && l.leq(s[1], t[1]) && l.leq(s[2], t[2]);
  };
  Triples out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (leq3(lo, t) && leq3(t, hi) && is_boolean_triple(l, t)) out.triples.push_back(t);
      }
  const auto& ts = out.triples;
  out.lattice = Lattice::from_poset(
      Poset::from_relation(ts.size(), [&](int a, int b) { return leq3(ts[a], ts[b]); }));
  if (!l.names().empty()) {
    std::vector<std::string> names;
    for (const auto& t : ts) names.push_back("(" + l.name(t[0]) + "," + l.name(t[1]) + "," + l.name(t[2]) + ")");
    out.lattice.set_names(std::move(names));
  }
  return out;
}

void check_embedding(const Lattice& l, const Triples& t) {
  for (int x = 0; x < int(l.size()); ++x) {
    if (t.gamma[x] < 0) throw std::logic_error("gamma leaves the triple lattice");
    for (int y = 0; y < int(l.size()); ++y)
      if (t.lattice.join(t.gamma[x], t.gamma[y]) != t.gamma[l.join(x, y)] ||
          t.lattice.meet(t.gamma[x], t.gamma[y]) != t.gamma[l.meet(x, y)])
        throw std::logic_error("gamma is not a lattice embedding");
  }
}

}  // namespace

Triples boolean_triples(const Lattice& l) {
  Triples t = build(l, {l.zero(), l.zero(), l.zero()}, {l.one(), l.one(), l.one()});
  for (int x = 0; x < int(l.size()); ++x) t.gamma.push_back(t.index_of({x, l.zero(), l.zero()}));
  check_embedding(l, t);
  return t;
}

TripleInterval boolean_triples_interval(const Lattice& l, int a, std::optional<int> b_opt) {
  const int o = l.zero(), i = l.one();
  const int b = b_opt.value_or(i);
  if (b_opt && !l.lt(a, b)) throw OrderError("M3[L,a,b] needs a < b");
  TripleInterval t;
  static_cast<Triples&>(t) = build(l, {o, a, o}, {i, b, b});
  t.a = a;
  t.b = b;
  for (int x = 0; x < int(l.size()); ++x) t.gamma.push_back(t.index_of({x, a, l.meet(x, a)}));
  check_embedding(l, t);

  t.zero = t.index_of({o, a, o});
  t.one = t.index_of({i, b, b});
  t.u = t.index_of({i, a, a});
  t.v = t.index_of({o, b, o});
  const Lattice& m = t.lattice;
  if (m.meet(t.u, t.v) != t.zero || m.join(t.u, t.v) != t.one) throw std::logic_error("u and v are not complements");
  t.ideal_i = m.interval(t.zero, t.v);
  t.filter_f = m.interval(t.v, t.one);
  t.i_of.assign(l.size(), -1);
  for (int x : l.interval(a, b)) t.i_of[x] = t.index_of({o, x, o});
  for (int x = 0; x < int(l.size()); ++x) t.f_of.push_back(t.index_of({x, b, l.meet(x, b)}));

  // v = v_B ∨ v_I ∨ v_J, each part a meet with a fixed element
  const int pb = t.u, pi = t.v, pj = t.index_of({a, a, b});
  for (int w = 0; w < int(m.size()); ++w) {
    std::array<int, 3> p{m.meet(w, pb), m.meet(w, pi), m.meet(w, pj)};
    if (m.join(m.join(p[0], p[1]), p[2]) != w) throw std::logic_error("B/I/J decomposition fails");
    t.parts.push_back(p);
  }
  return t;
}

Congruence triple_congruence(const Lattice& l, const Triples& t, const Congruence& a) {
  (void)l;
  std::vector<int> s;
  const int n = int(a.block_count());
  for (const auto& x : t.triples) s.push_back((a.block(x[0]) * n + a.block(x[1])) * n + a.block(x[2]));
  return Congruence(std::move(s));
}

bool synchronized(const Lattice& l, const TripleInterval& t, const Congruence& a) {
  Congruence ext = extend(t.lattice, t.f_of, a);
  for (int x : l.interval(t.a, t.b))
    for (int y : l.interval(t.a, t.b))
      if (ext.related(t.f_of[x], t.f_of[y]) != ext.related(t.i_of[x], t.i_of[y])) return false;
  return true;
}

}  // namespace latw
