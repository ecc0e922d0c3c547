#include "latw/cube.hpp"

#include <stdexcept>

namespace latw {

namespace {

// K plus a (0 < a < every y ≥ v) when u ≠ 0, and b (every x ≤ u < b < 1)
// when v ≠ 1.
std::optional<SimpleExtension> try_prime(const Lattice& k, int u, int v) {
  const int n = int(k.size());
  const bool add_a = u != k.zero(), add_b = v != k.one();
  const int a = add_a ? n : -1, b = add_b ? n + int(add_a) : -1;
  const int total = n + int(add_a) + int(add_b);
  auto leq = [&](int p, int q) {
    if (p == q) return true;
    if (p == a) return q < n && k.leq(v, q);
    if (q == a) return p == k.zero();
    if (p == b) return q == k.one();
    if (q == b) return p < n && k.leq(p, u);
    return k.leq(p, q);
  };
  Lattice s;
  try {
    s = Lattice::from_poset(Poset::from_relation(total, leq));
  } catch (const OrderError&) {
    return std::nullopt;
  }
  if (con_lattice(s).size() != 2) return std::nullopt;
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back(k.name(x));
  if (add_a) names.push_back("a'");
  if (add_b) names.push_back("b'");
  s.set_names(std::move(names));
  SimpleExtension out{std::move(s), {}};
  for (int x = 0; x < n; ++x) out.embed.push_back(x);
  return out;
}

}  // namespace

SimpleExtension simple_extension(const Lattice& k) {
  Subdirect sd = subdirect(k);
  if (sd.simple) {
    SimpleExtension out{k, {}};
    for (int x = 0; x < int(k.size()); ++x) out.embed.push_back(x);
    return out;
  }
  if (!sd.subdirectly_irreducible) throw OrderError("simple extension needs a subdirectly irreducible lattice");
  for (auto [u, v] : k.poset().cover_pairs()) {
    if (principal(k, u, v) != *sd.base) continue;
    if (auto s = try_prime(k, u, v)) return *s;
  }
  throw std::logic_error("no prime interval of the base congruence yields a simple extension");
}

CubicExtension cubic_extension(const Lattice& k) {
  if (k.size() < 2) throw OrderError("cubic extension needs a nontrivial lattice");
  CubicExtension c;
  c.meet_irreducibles = subdirect(k).meet_irreducible;
  for (const auto& g : c.meet_irreducibles) {
    Quotient q = quotient(k, g);
    SimpleExtension s = simple_extension(q.lattice);
    std::vector<int> f;
    for (int x = 0; x < int(k.size()); ++x) f.push_back(s.embed[q.map[x]]);
    c.to_factor.push_back(std::move(f));
    c.factors.push_back(std::move(s.lattice));
  }
  c.cube = direct_product(c.factors);
  for (int x = 0; x < int(k.size()); ++x) {
    std::vector<int> coords;
    for (const auto& f : c.to_factor) coords.push_back(f[x]);
    c.diag.push_back(c.cube.at(coords));
  }
  return c;
}

Congruence cube_congruence(const CubicExtension& c, const Congruence& kappa) {
  std::vector<Congruence> parts;
  for (std::size_t i = 0; i < c.meet_irreducibles.size(); ++i) {
    std::size_t n = c.cube.sizes[i];
    parts.push_back(kappa.refines(c.meet_irreducibles[i]) ? Congruence::zero(n) : Congruence::one(n));
  }
  return product_congruence(c.cube, parts);
}

namespace {

template <class Pick>
std::vector<int> boolean_part(const CubicExtension& c, Pick pick) {
  std::vector<std::pair<int, int>> allowed;  // per factor: two admissible coordinates
  for (std::size_t i = 0; i < c.cube.sizes.size(); ++i) allowed.push_back(pick(i));
  std::vector<int> out;
  for (int x = 0; x < int(c.lattice().size()); ++x) {
    auto co = c.cube.coords(x);
    bool in = true;
    for (std::size_t i = 0; i < co.size() && in; ++i) in = co[i] == allowed[i].first || co[i] == allowed[i].second;
    if (in) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<int> atom_ideal(const CubicExtension& c) {
  return boolean_part(c, [&](std::size_t i) {
    const Lattice& f = c.factors[i];
    return std::make_pair(f.zero(), f.poset().upper_covers(f.zero()).front());
  });
}

std::vector<int> dual_atom_filter(const CubicExtension& c) {
  return boolean_part(c, [&](std::size_t i) {
    const Lattice& f = c.factors[i];
    return std::make_pair(f.poset().lower_covers(f.one()).front(), f.one());
  });
}

}  // namespace latw
