#pragma once

#include <vector>

#include "latw/congruence.hpp"

namespace latw {

// A finite meet-semilattice with its partial join.
class ChoppedLattice {
 public:
  ChoppedLattice() = default;
  // Validates that every ↓m is a lattice and every pair has a meet.
  static ChoppedLattice from_poset(Poset p);

  const Poset& poset() const { return p_; }
  std::size_t size() const { return p_.size(); }
  bool leq(int a, int b) const { return p_.leq(a, b); }
  int meet(int a, int b) const { return meet_[std::size_t(a) * size() + b]; }
  int join(int a, int b) const { return join_[std::size_t(a) * size() + b]; }  // -1 if undefined
  int zero() const { return zero_; }

  const std::vector<int>& max_elements() const { return max_; }
  // ↓m as a lattice; element i of piece(k) is piece_elements(k)[i].
  const Lattice& piece(std::size_t k) const { return pieces_[k]; }
  const std::vector<int>& piece_elements(std::size_t k) const { return piece_elems_[k]; }
  int piece_index(std::size_t k, int x) const;  // -1 if x is not below max_elements()[k]

  const std::vector<std::string>& names() const { return names_; }
  std::string name(int a) const;
  void set_names(std::vector<std::string> names);
  int at(const std::string& name) const;

 private:
  Poset p_;
  std::vector<int> meet_, join_;
  int zero_ = 0;
  std::vector<int> max_;
  std::vector<Lattice> pieces_;
  std::vector<std::vector<int>> piece_elems_;
  std::vector<std::string> names_;
};

// Union of lattices along shared elements: ids[k][x] is the global id of
// element x of pieces[k].  Shared parts must be ideals on which the orders agree.
struct Merge {
  ChoppedLattice chopped;
  std::vector<std::vector<int>> ids;
};
Merge merge(const std::vector<Lattice>& pieces, const std::vector<std::vector<int>>& ids);
// Merge(C, D) with the identification c ~ d for each listed pair.
Merge merge(const Lattice& c, const Lattice& d, const std::vector<std::pair<int, int>>& shared);

// Vectors are indexed by position in max_elements(); entries are elements of M.
bool is_compatible(const ChoppedLattice& m, const std::vector<int>& v);
std::vector<int> compatible_closure(const ChoppedLattice& m, std::vector<int> v);
Bits ideal_of_vector(const ChoppedLattice& m, const std::vector<int>& v);
std::vector<int> vector_of_ideal(const ChoppedLattice& m, const Bits& ideal);
bool is_ideal(const ChoppedLattice& m, const Bits& s);
// I ∨ J by the U(I,J)_i iteration.
Bits ideal_join_by_iteration(const ChoppedLattice& m, const Bits& i, const Bits& j);

struct IdealLattice {
  Lattice lattice;
  std::vector<std::vector<int>> vectors;  // element -> compatible vector
  std::vector<int> embed;                 // x in M -> id(x)
  int index_of(const std::vector<int>& v) const;
};
IdealLattice ideal_lattice(const ChoppedLattice& m);

// SP∧ and SP∨ (whenever both joins exist), checked directly.
bool is_chopped_congruence(const ChoppedLattice& m, const Congruence& a);
// The congruence of M with the given compatible restriction vector.
Congruence congruence_from_vector(const ChoppedLattice& m, const std::vector<Congruence>& v);
std::vector<Congruence> restriction_vector(const ChoppedLattice& m, const Congruence& a);

struct ChoppedCongruences {
  std::vector<Congruence> congruences;           // ascending by signature
  std::vector<std::vector<Congruence>> vectors;  // matching compatible congruence vectors
  std::size_t size() const { return congruences.size(); }
};
ChoppedCongruences chopped_congruences(const ChoppedLattice& m);

// ᾱ on Id M: I ≡ J iff I/α = J/α.
Congruence ideal_extension(const ChoppedLattice& m, const IdealLattice& id, const Congruence& a);

}  // namespace latw

namespace latw {

// Two sectionally complemented ten-element lattices glued over a shared B2
// ideal {0,p,q,u}; the compatible vector (a,b) has no complement in Id M.
Merge sc_counterexample();
// Two lattices sharing only {0, p}, where p is atom_a of A and atom_b of B.
Merge atom_merge(const Lattice& a, int atom_a, const Lattice& b, int atom_b);

}  // namespace latw
