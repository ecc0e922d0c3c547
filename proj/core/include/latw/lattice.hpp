#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latw/poset.hpp"

namespace latw {

// A pair without a join (or meet).  `a`, `b` name the offending pair.
class NotALattice : public OrderError {
 public:
  NotALattice(int a, int b, bool join_missing);
  int a, b;
  bool join_missing;
};

class Lattice {
 public:
  Lattice() = default;

  static Lattice from_poset(Poset p);
  static Lattice from_covers(std::size_t n, const std::vector<CoverPair>& pairs);

  const Poset& poset() const { return p_; }
  std::size_t size() const { return p_.size(); }
  bool leq(int a, int b) const { return p_.leq(a, b); }
  bool lt(int a, int b) const { return p_.lt(a, b); }
  int meet(int a, int b) const { return meet_[std::size_t(a) * size() + b]; }
  int join(int a, int b) const { return join_[std::size_t(a) * size() + b]; }
  int meet(const std::vector<int>& xs) const;  // empty -> one
  int join(const std::vector<int>& xs) const;  // empty -> zero
  int zero() const { return zero_; }
  int one() const { return one_; }

  const std::vector<std::string>& names() const { return names_; }
  std::string name(int a) const;
  void set_names(std::vector<std::string> names);
  std::optional<int> find(const std::string& name) const;
  int at(const std::string& name) const;  // throws when absent

  std::vector<int> interval(int a, int b) const;  // [a,b], ascending index
  bool closed(const std::vector<int>& elems) const;
  // Sublattice on `elems` (must be closed); element i of the result is elems[i].
  Lattice sublattice(const std::vector<int>& elems) const;
  Lattice interval_lattice(int a, int b) const { return sublattice(interval(a, b)); }

 private:
  Poset p_;
  std::vector<int> meet_, join_;
  int zero_ = 0, one_ = 0;
  std::vector<std::string> names_;
};

Lattice dual(const Lattice& l);

struct ElementReport {
  std::vector<int> join_irreducibles, meet_irreducibles, atoms, dual_atoms;
  std::map<int, int> lower_cover_of_ji;  // a -> a_*
  std::map<int, int> upper_cover_of_mi;  // a -> a^*
};
ElementReport irreducibles(const Lattice& l);
std::vector<int> ji_below(const Lattice& l, int a);  // J(a)

struct ClassReport {
  bool distributive = false;
  bool modular = false;
  bool upper_semimodular = false;
  bool lower_semimodular = false;
  bool join_semidistributive = false;
  bool meet_semidistributive = false;
  bool complemented = false;
  bool sectionally_complemented = false;
  bool relatively_complemented = false;
  bool atomistic = false;
};
ClassReport classify(const Lattice& l);

bool is_distributive(const Lattice& l);
bool is_modular(const Lattice& l);
bool is_upper_semimodular(const Lattice& l);
bool is_lower_semimodular(const Lattice& l);
bool is_meet_semidistributive(const Lattice& l);
bool is_join_semidistributive(const Lattice& l);
bool is_complemented(const Lattice& l);
bool is_sectionally_complemented(const Lattice& l);
bool is_relatively_complemented(const Lattice& l);
bool is_atomistic(const Lattice& l);

// Largest x with a ∧ x = 0, when such a largest element exists.
std::optional<int> pseudocomplement(const Lattice& l, int a);
bool is_prime_ideal(const Lattice& l, const Bits& p);

// Least-index complement of x in [lo, hi], if any.
std::optional<int> complement_in(const Lattice& l, int x, int lo, int hi);
// First pair a <= b with no sectional complement of a in [0,b].
std::optional<std::pair<int, int>> sectional_complement_failure(const Lattice& l);

enum class Pattern { N5, M3 };
// N5: {o, a, b, c, i} with o<a<b<i, o<c<i.  M3: {o, a, b, c, i}, three atoms.
std::optional<std::vector<int>> find_forbidden_sublattice(const Lattice& l, Pattern p);
std::vector<int> sublattice_closure(const Lattice& l, const std::vector<int>& h);

struct DownSetLattice {
  Lattice lattice;
  std::vector<Bits> sets;  // element i of `lattice` is the down set sets[i]
  int index_of(const Bits& s) const;
};
DownSetLattice down_set_lattice(const Poset& p);

struct BirkhoffIso {
  std::vector<int> ji;  // J(L), ascending
  Poset ji_poset;       // J(L) as an ordered set; element k is ji[k]
  DownSetLattice dn;    // Dn(J(L))
  std::vector<int> map; // a -> index in dn.lattice of J(a) as a down set
};
BirkhoffIso birkhoff_iso(const Lattice& l);  // throws OrderError if not distributive

// Bounded-homomorphism check; returns a witness pair (b == -1 for bound failures).
struct HomFailure {
  int a, b;
  std::string what;
};
std::optional<HomFailure> check_bounded_hom(const Lattice& d, const Lattice& e,
                                            const std::vector<int>& phi);
bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map);

// J(phi): J(E) -> J(D), indexed by irreducibles(E).join_irreducibles order.
std::vector<int> ji_map(const Lattice& d, const Lattice& e, const std::vector<int>& phi);
// Inverse direction: from psi: J(E) -> J(D) rebuild phi: D -> E.
std::vector<int> hom_from_ji_map(const Lattice& d, const Lattice& e, const std::vector<int>& psi);

// Every lattice of n <= 8 elements, one per isomorphism class, canonically labelled.
std::vector<Lattice> enumerate_lattices(std::size_t n);

}  // namespace latw
