#pragma once

#include <vector>

#include "latw/chopped.hpp"

namespace latw {

// A finite sectionally complemented lattice L with J(Con L) ≅ P: one atom per
// element of P, an N(p,q) piece for every cover q ≺ p (its atom p is the atom
// of p, its atom q1 the atom of q), a lone C2 piece for every element with no
// covers, merged along the atoms; L = Id M.
struct BasicRT {
  Lattice lattice;           // canonically relabelled
  ChoppedLattice chopped;    // M
  std::vector<int> atom_of;  // p -> element of `lattice` generated by the atom of p
};
BasicRT basic_rt(const Poset& p);

struct BasicRTCheck {
  bool sectionally_complemented = false;
  bool ji_isomorphic = false;  // J(Con L) ≅ P by any isomorphism
  bool atom_map = false;       // p ↦ con(0, atom_of[p]) is that isomorphism
};
BasicRTCheck verify_basic_rt(const Poset& p, const BasicRT& rt);

}  // namespace latw
