#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latw/congruence.hpp"
#include "latw/constructions.hpp"

namespace latw {

// A lattice together with a left-to-right order on the upper covers of every
// element.  Planarity is purely combinatorial: lower-cover orders are read off
// the cells, and the resulting rotation system must satisfy Euler's formula
// with C_l ∪ C_r bounding the outer face.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  // up[x] must be a permutation of the upper covers of x (throws OrderError).
  // Crossing diagrams are accepted here; validate_planar reports them.
  PlanarDiagram(Lattice l, std::vector<std::vector<int>> up);
  // Upper covers sorted by horizontal position x[·].
  static PlanarDiagram from_positions(Lattice l, const std::vector<double>& x);

  const Lattice& lattice() const { return l_; }
  std::size_t size() const { return l_.size(); }
  const std::vector<int>& upper(int x) const { return up_[x]; }
  const std::vector<int>& lower(int x) const { return down_[x]; }  // left to right
  const std::vector<std::vector<int>>& upper_lists() const { return up_; }
  // False when the cells do not induce a linear order on some lower covers.
  bool lower_orders_consistent() const { return consistent_; }

  std::vector<int> left_boundary() const;   // C_l, bottom to top
  std::vector<int> right_boundary() const;  // C_r
  bool on_left_boundary(int x) const { return on_left_[x]; }
  bool on_right_boundary(int x) const { return on_right_[x]; }
  bool on_boundary(int x) const { return on_left_[x] || on_right_[x]; }

  // a ∥ b and a lies left of the maximal chains through b.  Meaningful on valid diagrams.
  bool left_of(int a, int b) const;
  // Side of x relative to the maximal chain `chain` (bottom to top, x off it):
  // bit 1 = reached by leaving the chain to the left, bit 2 = to the right.
  unsigned side(int x, const std::vector<int>& chain) const;

 private:
  void finish();

  Lattice l_;
  std::vector<std::vector<int>> up_, down_;
  bool consistent_ = true;
  std::vector<bool> on_left_, on_right_;
};

struct PlanarCheck {
  bool valid = false;
  // Two edges E, F with 0_E left of 0_F and 1_E right of 1_F.
  std::optional<std::pair<CoverPair, CoverPair>> crossing;
};
PlanarCheck validate_planar(const PlanarDiagram& d);

// First valid diagram found by trying cover orders; nullopt if L is not planar
// or the search budget runs out.
std::optional<PlanarDiagram> find_planar_diagram(const Lattice& l, std::size_t budget = 2'000'000);
// C_m × C_n drawn with the first factor going up-left; element i*n + j.
PlanarDiagram grid_diagram(std::size_t m, std::size_t n);
// [lo, hi] with the induced cover orders; element k is interval(lo, hi)[k].
PlanarDiagram interval_diagram(const PlanarDiagram& d, int lo, int hi);

// A bounded region: bottom, top and the two sides strictly between them.
struct Cell {
  int bottom = 0, top = 0;
  std::vector<int> left, right;
  bool is_four() const { return left.size() == 1 && right.size() == 1; }
  std::array<int, 4> corners() const { return {bottom, left.front(), right.front(), top}; }
  bool operator==(const Cell& o) const = default;
};
std::vector<Cell> cells(const PlanarDiagram& d);
std::vector<Cell> four_cells(const PlanarDiagram& d);
std::optional<Cell> four_cell(const PlanarDiagram& d, int bottom, int left, int right, int top);
// Cover-preserving B2 sublattices {o, a, b, i}, a < b by index.
std::vector<std::array<int, 4>> covering_squares(const Lattice& l);
// Cover-preserving M3 sublattices {o, a, b, c, i}.
std::vector<std::array<int, 5>> covering_m3s(const Lattice& l);

struct SPSReport {
  bool planar = false, semimodular = false, slim = false, sps = false;
  bool rectangular = false, sr = false, patch = false, four_cell = false;
  std::optional<int> lc, rc;  // corners when rectangular
};
SPSReport sps_predicates(const PlanarDiagram& d);
bool is_doubly_irreducible(const Lattice& l, int x);

// Strip of edges from e going down-left (down-right) to the left (right)
// boundary, each the opposite side of a 4-cell from its predecessor.  Throws
// OrderError when a step has no 4-cell.
std::vector<CoverPair> left_wing(const PlanarDiagram& d, CoverPair e);
std::vector<CoverPair> right_wing(const PlanarDiagram& d, CoverPair e);

// L[C]: new elements are appended as m, x1..xk (left strip), y1..yl (right strip).
struct ForkInsertion {
  PlanarDiagram diagram;
  int m = 0;
  std::vector<int> xs, ys;
};
ForkInsertion insert_fork(const PlanarDiagram& d, const Cell& c);

// Inverse of insert_fork at a minimal cover-preserving S7 whose top is `top` and
// whose middle lower cover is `middle`.
struct ForkDeletion {
  PlanarDiagram diagram;
  Cell cell;              // in the indexing of `diagram`
  std::vector<int> kept;  // new index -> old index
  int m = 0;              // removed elements, old indices
  std::vector<int> xs, ys;
};
ForkDeletion delete_fork(const PlanarDiagram& d, int top, int middle);
// Tops of minimal cover-preserving S7's: elements with >= 3 lower covers and no
// such element strictly below.
std::vector<int> minimal_fork_tops(const PlanarDiagram& d);

std::vector<int> eyes(const PlanarDiagram& d);
PlanarDiagram add_eye(const PlanarDiagram& d, const Cell& c);  // new element appended
PlanarDiagram remove_element(const PlanarDiagram& d, int x);  // doubly irreducible x
PlanarDiagram slimming(const PlanarDiagram& d);

// SR lattice = grid + forks.  forks[k] is a 4-cell of the diagram obtained from
// grid_diagram(rows, cols) after the first k insertions.
struct StructureDecomposition {
  std::size_t rows = 0, cols = 0;
  std::vector<Cell> forks;
  std::vector<int> replay_to_input;  // replay(...) index -> input index
};
StructureDecomposition structure_decompose(const PlanarDiagram& d);
PlanarDiagram replay(const StructureDecomposition& s);
PlanarDiagram random_sr(std::size_t rows, std::size_t cols, std::size_t forks, std::uint64_t seed);

// ψ(x) = (x ∧ lc, x ∧ rc) read as positions on the chains [0, lc], [0, rc].
struct NaturalDiagram {
  std::vector<std::pair<int, int>> coords;
  int lc = 0, rc = 0;
  bool injective = false, meet_preserving = false, bounds_preserved = false, join_identity = false;
  // Drawing position: x = j - i, y = i + j.
  std::pair<int, int> position(int x) const { return {coords[x].second - coords[x].first, coords[x].first + coords[x].second}; }
  bool steep(CoverPair e) const;
};
NaturalDiagram natural_diagram(const PlanarDiagram& d);  // throws unless SR
// Edges breaking the rule: steep exactly for middle edges of peak S7's.
std::vector<CoverPair> c1_violations(const PlanarDiagram& d, const NaturalDiagram& nd);

std::vector<std::vector<CoverPair>> trajectories(const PlanarDiagram& d);
// An edge of the trajectory that is the upper edge of both neighbouring cells.
std::optional<CoverPair> top_edge(const PlanarDiagram& d, const std::vector<CoverPair>& t);

struct RectangularIntervalReport {
  bool sr = false;
  bool corners_match = false;  // lc(I) = a, rc(I) = b
  // The rest is about the corners lc(I), rc(I) and only filled in when I is SR.
  bool chains = false;         // [o,lc], [o,rc] are chains
  bool lower_boundary_meet_reducible = false;
  bool join_identity = false;  // x = (x∧lc) ∨ (x∧rc) on I
};
// Throws OrderError unless a, b are complementary in [o, i] with a left of b.
RectangularIntervalReport rectangular_interval_check(const PlanarDiagram& d, int o, int i, int a, int b);

// α is generated by its restrictions to the lower boundary chains [0,lc], [0,rc].
struct Coordinatization {
  Congruence left, right;  // on interval(0, lc), interval(0, rc)
  Congruence reconstructed;
  bool exact = false;
};
Coordinatization coordinatize_congruence(const PlanarDiagram& d, const Congruence& a);

struct DiagramGluing {
  PlanarDiagram diagram;
  Gluing gluing;
};
// glue() with cover orders: glued elements take the orders of L.
DiagramGluing glue_diagrams(const PlanarDiagram& k, const PlanarDiagram& l, const std::vector<int>& filter,
                            const std::vector<int>& phi);

// V from top G, left Y, right Z, bottom U: X = U+Y, W = Z+G, V = X+W, each glued
// over facing boundary chains.  from_*[k] is the V index of element k.
struct TripleGluing {
  PlanarDiagram diagram;
  std::vector<int> from_g, from_y, from_z, from_u;
};
TripleGluing triple_gluing(const PlanarDiagram& g, const PlanarDiagram& y, const PlanarDiagram& z,
                           const PlanarDiagram& u);
// [x∧y, 1], [lc∧y, x], [x∧rc, y], [0, (lc∧y)∨(x∧rc)] for x ∈ C_ul, y ∈ C_ur.
std::array<PlanarDiagram, 4> rectangular_quarters(const PlanarDiagram& d, int x, int y);

// Corners: doubly irreducible boundary elements other than 0, 1 whose removal
// keeps the lattice semimodular, C_l bottom-up first, then C_r.
std::vector<int> eligible_corners(const PlanarDiagram& d);
PlanarDiagram remove_corner(const PlanarDiagram& d);  // leftmost eligible
// New doubly irreducible element e with c_j ≺ e ≺ c_{j+2} outside C_l (or C_r).
PlanarDiagram add_corner(const PlanarDiagram& d, bool left, std::size_t j);
struct RectangularExtension {
  PlanarDiagram diagram;
  std::vector<int> added;  // in insertion order; the input keeps its indices
};
// Corners are added until the diagram is rectangular, keeping semimodularity
// (and slimness when the input is slim).  Needs |L| >= 3.
RectangularExtension rectangular_extension(const PlanarDiagram& d);

}  // namespace latw
