#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latw/lattice.hpp"

namespace latw {

// A partition of 0..n-1.  Block ids are canonical: blocks are numbered in
// order of their least element, so equal partitions have equal signatures.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<int> block_of);
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks);
  static Congruence zero(std::size_t n);
  static Congruence one(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  int block(int x) const { return block_of_[x]; }
  bool related(int x, int y) const { return block_of_[x] == block_of_[y]; }
  const std::vector<int>& signature() const { return block_of_; }
  std::size_t block_count() const { return count_; }
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_members(int x) const;

  bool is_zero() const { return count_ == size(); }
  bool is_one() const { return count_ <= 1; }
  bool refines(const Congruence& o) const;  // this <= o

  bool operator==(const Congruence& o) const { return block_of_ == o.block_of_; }
  bool operator!=(const Congruence& o) const { return !(*this == o); }
  bool operator<(const Congruence& o) const { return block_of_ < o.block_of_; }

 private:
  std::vector<int> block_of_;
  std::size_t count_ = 0;
};

std::string to_string(const Lattice& l, const Congruence& c);  // "{o},{a,b},{c},{i}"

// Substitution-property violation: x ≡ y but x op z ≢ y op z.
struct SPFailure {
  int x, y, z;
  bool join;
};
std::optional<SPFailure> sp_failure(const Lattice& l, const Congruence& pi);
bool is_congruence(const Lattice& l, const Congruence& pi);
// Finite-lattice criterion: interval blocks plus the covering condition and its dual.
bool is_congruence_by_intervals(const Lattice& l, const Congruence& pi);

Congruence principal(const Lattice& l, int a, int b);
Congruence generated(const Lattice& l, const std::vector<std::pair<int, int>>& pairs);
Congruence collapse_set(const Lattice& l, const std::vector<int>& h);  // con(H)

Congruence cong_meet(const Congruence& a, const Congruence& b);
Congruence cong_join(const Congruence& a, const Congruence& b);

struct ConLattice {
  std::vector<Congruence> congruences;  // ascending by signature
  Lattice lattice;                      // element i is congruences[i]
  std::vector<Bits> ji_sets;            // congruence i as a down set of `ji`
  std::vector<int> ji;                  // indices of J(Con L)
  Poset ji_poset;                       // element k is congruences[ji[k]]
  std::vector<CoverPair> primes;        // prime intervals of L
  std::vector<int> prime_class;         // prime k -> position in `ji` of con(primes[k])
  std::vector<bool> principal;
  int zero = 0, one = 0;

  std::size_t size() const { return congruences.size(); }
  int index_of(const Congruence& c) const;
};

ConLattice con_lattice(const Lattice& l);
// J(Con L) only; cheaper when the full lattice is not needed.
std::vector<Congruence> ji_congruences(const Lattice& l);
Poset ji_order(const std::vector<Congruence>& ji);

// Prime interval p ⇒ q, read off from the congruence that p generates.
bool prime_forces(const Lattice& l, CoverPair p, CoverPair q);

struct Quotient {
  Lattice lattice;
  std::vector<int> map;  // element -> block id (= element of the quotient)
};
Quotient quotient(const Lattice& l, const Congruence& a);
// Con(L/α) ≅ [α, 1] in Con L, checked by mapping congruences across.
bool quotient_correspondence_holds(const Lattice& l, const Congruence& a);

// K is given as a list of elements of L; positions in the list index K.
Congruence restrict(const Lattice& l, const std::vector<int>& k, const Congruence& a);
Congruence extend(const Lattice& l, const std::vector<int>& k, const Congruence& a);

struct ExtensionClass {
  bool reflecting = false;
  bool determining = false;
  bool preserving = false;
};
// Computed via re/ext map equations and, independently, via prime intervals;
// throws std::logic_error if the two disagree.
ExtensionClass extension_class(const Lattice& l, const std::vector<int>& k);
ExtensionClass extension_class_by_maps(const Lattice& l, const std::vector<int>& k);
ExtensionClass extension_class_by_primes(const Lattice& l, const std::vector<int>& k);

struct Geometry {
  bool uniform = false;
  bool isoform = false;
  bool regular = false;
};
Geometry congruence_geometry(const Lattice& l, const Congruence& a);
struct LatticeGeometry {
  bool uniform = true;
  bool isoform = true;
  bool regular = true;
};
LatticeGeometry lattice_geometry(const Lattice& l);

struct Subdirect {
  bool simple = false;
  bool subdirectly_irreducible = false;
  std::optional<Congruence> base;           // unique atom of Con L when SI
  std::vector<Congruence> meet_irreducible;  // all of Con_M L
  std::vector<Congruence> decomposition;     // meet-irreducibles meeting to 0
  bool embedding_verified = false;
};
Subdirect subdirect(const Lattice& l);

struct IntervalRelations {
  bool perspective_up = false;
  bool perspective_dn = false;
  bool projective = false;
  bool cong_perspective_up = false;
  bool cong_perspective_dn = false;
  bool cong_projective = false;  // [a,b] ⇒ [c,d]
};
IntervalRelations interval_relations(const Lattice& l, int a, int b, int c, int d);

}  // namespace latw
