#include "latw/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latw {

int Product::at(const std::vector<int>& c) const {
  int x = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) x = x * int(sizes[i]) + c[i];
  return x;
}

std::vector<int> Product::coords(int x) const {
  std::vector<int> c(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    c[i] = x % int(sizes[i]);
    x /= int(sizes[i]);
  }
  return c;
}

Product direct_product(const std::vector<Lattice>& factors) {
  Product p;
  std::size_t n = 1;
  for (const auto& f : factors) {
    p.sizes.push_back(f.size());
    n *= f.size();
  }
  // covers of a product: raise exactly one coordinate along a cover
  std::vector<CoverPair> pairs;
  for (int x = 0; x < int(n); ++x) {
    auto c = p.coords(x);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      int keep = c[i];
      for (int u : factors[i].poset().upper_covers(keep)) {
        c[i] = u;
        pairs.emplace_back(x, p.at(c));
      }
      c[i] = keep;
    }
  }
  p.lattice = Lattice::from_covers(n, pairs);
  bool named = std::any_of(factors.begin(), factors.end(), [](const Lattice& f) { return !f.names().empty(); });
  if (named) {
    std::vector<std::string> names;
    for (int x = 0; x < int(n); ++x) {
      auto c = p.coords(x);
      std::string s = "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + factors[i].name(c[i]);
      names.push_back(s + ")");
    }
    p.lattice.set_names(std::move(names));
  }
  return p;
}

Product direct_product(const Lattice& l, const Lattice& k) { return direct_product(std::vector<Lattice>{l, k}); }

Congruence product_congruence(const Product& p, const std::vector<Congruence>& factors) {
  if (factors.size() != p.sizes.size()) throw OrderError("one congruence per factor is needed");
  std::vector<int> s(p.lattice.size());
  for (int x = 0; x < int(s.size()); ++x) {
    auto c = p.coords(x);
    std::vector<int> b(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) b[i] = factors[i].block(c[i]);
    int code = 0;
    for (std::size_t i = 0; i < c.size(); ++i) code = code * int(p.sizes[i]) + b[i];
    s[x] = code;
  }
  return Congruence(std::move(s));
}

std::vector<Congruence> split_congruence(const Product& p, const Congruence& g) {
  // factor i: a ≡ b iff (..a..) ≡ (..b..) with the other coordinates at 0
  std::vector<Congruence> out;
  for (std::size_t i = 0; i < p.sizes.size(); ++i) {
    std::vector<int> base(p.sizes.size(), 0), s(p.sizes[i]);
    for (int a = 0; a < int(p.sizes[i]); ++a) {
      base[i] = a;
      s[a] = g.block(p.at(base));
    }
    out.emplace_back(std::move(s));
  }
  if (product_congruence(p, out) != g) throw OrderError("not a product congruence");
  return out;
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  const std::size_t n = p.size(), m = q.size();
  auto pairs = p.cover_pairs();
  for (auto [a, b] : q.cover_pairs()) pairs.emplace_back(a + int(n), b + int(n));
  for (int a : p.maximal())
    for (int b : q.minimal()) pairs.emplace_back(a, b + int(n));
  return Poset::from_covers(n + m, pairs);
}

Poset glued_sum(const Poset& p, const Poset& q) {
  auto top = p.maximal();
  auto bottom = q.minimal();
  if (top.size() != 1 || bottom.size() != 1) throw OrderError("glued sum needs 1_P and 0_Q");
  const std::size_t n = p.size();
  // q's zero becomes p's unit; the rest of q is shifted past p
  auto index = [&](int b) { return b == bottom[0] ? top[0] : (b < bottom[0] ? b : b - 1) + int(n); };
  auto pairs = p.cover_pairs();
  for (auto [a, b] : q.cover_pairs()) pairs.emplace_back(index(a), index(b));
  return Poset::from_covers(n + q.size() - 1, pairs);
}

Lattice ordinal_sum(const Lattice& p, const Lattice& q) {
  return Lattice::from_poset(ordinal_sum(p.poset(), q.poset()));
}

Lattice glued_sum(const Lattice& p, const Lattice& q) { return Lattice::from_poset(glued_sum(p.poset(), q.poset())); }

Gluing glue(const Lattice& k, const Lattice& l, const std::vector<int>& filter, const std::vector<int>& phi) {
  if (filter.size() != phi.size() || filter.empty()) throw OrderError("gluing needs a nonempty filter and its image");
  Bits f(k.size()), in_i(l.size());
  for (int x : filter) f.set(x);
  for (int y : phi) in_i.set(y);
  if (f.count() != filter.size() || in_i.count() != phi.size()) throw OrderError("gluing map is not one-to-one");
  if (!k.poset().is_up_set(f) || !k.closed(filter)) throw OrderError("F is not a filter of K");
  if (!l.poset().is_down_set(in_i) || !l.closed(phi)) throw OrderError("I is not an ideal of L");
  for (std::size_t i = 0; i < filter.size(); ++i)
    for (std::size_t j = 0; j < filter.size(); ++j)
      if (k.leq(filter[i], filter[j]) != l.leq(phi[i], phi[j])) throw OrderError("phi is not an isomorphism F -> I");

  Gluing g;
  const int nk = int(k.size());
  g.from_k.resize(k.size());
  std::iota(g.from_k.begin(), g.from_k.end(), 0);
  g.from_l.assign(l.size(), -1);
  for (std::size_t i = 0; i < filter.size(); ++i) g.from_l[phi[i]] = filter[i];
  int next = nk;
  for (int y = 0; y < int(l.size()); ++y)
    if (g.from_l[y] < 0) g.from_l[y] = next++;
  // the order of G is the transitive closure of both cover relations
  std::vector<CoverPair> pairs = k.poset().cover_pairs();
  for (auto [a, b] : l.poset().cover_pairs()) pairs.emplace_back(g.from_l[a], g.from_l[b]);
  Lattice out = Lattice::from_covers(std::size_t(next), pairs);
  if (!k.names().empty() || !l.names().empty()) {
    std::vector<std::string> names(next);
    for (int y = 0; y < int(l.size()); ++y) names[g.from_l[y]] = l.name(y);
    for (int x = 0; x < nk; ++x) names[x] = k.name(x);
    out.set_names(std::move(names));
  }
  g.lattice = std::move(out);
  return g;
}

Congruence glue_congruence(const Gluing& g, const Lattice& k, const Lattice& l, const Congruence& ak,
                           const Congruence& al) {
  const int n = int(g.lattice.size());
  // restrictions to F = I must agree
  for (int y = 0; y < int(l.size()); ++y)
    for (int y2 = 0; y2 < int(l.size()); ++y2) {
      int x = g.from_l[y], x2 = g.from_l[y2];
      if (x < int(k.size()) && x2 < int(k.size()) && ak.related(x, x2) != al.related(y, y2))
        throw OrderError("congruences disagree on the glued part");
    }
  std::vector<int> to_l(n, -1);
  for (int y = 0; y < int(l.size()); ++y) to_l[g.from_l[y]] = y;
  auto rk = [&](int a, int b) { return a < int(k.size()) && b < int(k.size()) && ak.related(a, b); };
  auto rl = [&](int a, int b) { return to_l[a] >= 0 && to_l[b] >= 0 && al.related(to_l[a], to_l[b]); };
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool r = a == b || rk(a, b) || rl(a, b);
      for (int z = 0; z < n && !r; ++z) r = (rk(a, z) && rl(z, b)) || (rl(a, z) && rk(z, b));
      rel[a][b] = r;
    }
  std::vector<int> s(n, -1);
  for (int a = 0; a < n; ++a)
    if (s[a] < 0)
      for (int b = 0; b < n; ++b)
        if (rel[a][b]) s[b] = a;
  Congruence c(s);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c.related(a, b) != rel[a][b]) throw std::logic_error("reflexive product is not an equivalence");
  return c;
}

std::pair<Congruence, Congruence> split_glued_congruence(const Gluing& g, const Congruence& a) {
  std::vector<int> sk, sl;
  for (int x : g.from_k) sk.push_back(a.block(x));
  for (int y : g.from_l) sl.push_back(a.block(y));
  return {Congruence(std::move(sk)), Congruence(std::move(sl))};
}

}  // namespace latw
