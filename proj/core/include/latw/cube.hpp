#pragma once

#include <vector>

#include "latw/constructions.hpp"

namespace latw {

struct SimpleExtension {
  Lattice lattice;
  std::vector<int> embed;  // element of K -> element of Simp K
};
// Embeds a subdirectly irreducible K into a simple lattice with at most two
// new elements; a simple K comes back unchanged.  Throws OrderError if K is
// not subdirectly irreducible.
SimpleExtension simple_extension(const Lattice& k);

struct CubicExtension {
  Product cube;                               // ∏ Simp(K/γ)
  std::vector<Lattice> factors;               // Simp(K/γ_i)
  std::vector<Congruence> meet_irreducibles;  // Con_M K, one per factor
  std::vector<std::vector<int>> to_factor;    // factor i: element of K -> a/γ_i in Simp(K/γ_i)
  std::vector<int> diag;                      // a -> Diag(a)

  const Lattice& lattice() const { return cube.lattice; }
};
CubicExtension cubic_extension(const Lattice& k);

// Componentwise 0 where κ ≤ γ, 1 elsewhere.
Congruence cube_congruence(const CubicExtension& c, const Congruence& kappa);
// Ideal generated by one atom per factor (the least-index atom), and the
// filter generated by the dual atoms t̄_γ; both ascending.
std::vector<int> atom_ideal(const CubicExtension& c);
std::vector<int> dual_atom_filter(const CubicExtension& c);

}  // namespace latw
