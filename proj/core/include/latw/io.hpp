#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latw/congruence.hpp"
#include "latw/planar.hpp"

namespace latw {

// Text format, one directive per line:
//   # comment
//   lattice NAME | poset NAME
//   n COUNT
//   planar                     (cover order on each line is left to right)
//   labels L0 L1 ...           (exactly COUNT names)
//   covers I: J K ...          (J, K are the upper covers of I)
struct LatticeFile {
  enum class Kind { Lattice, Poset };
  Kind kind = Kind::Lattice;
  std::string name;
  std::size_t n = 0;
  bool planar = false;
  std::vector<std::string> labels;    // empty or n entries
  std::vector<std::vector<int>> up;   // n lists of upper covers
};

// Diagnostics carry the 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = "");
  std::size_t line;
  std::string detail;
};

LatticeFile parse_lattice_file(const std::string& text);
// Normalized form: covers lines in index order; upper covers sorted unless planar.
std::string serialize(const LatticeFile& f);
LatticeFile read_lattice_file(const std::string& path);

Poset to_poset(const LatticeFile& f);
Lattice to_lattice(const LatticeFile& f);  // throws ParseError for non-lattices
PlanarDiagram to_diagram(const LatticeFile& f);  // needs the planar flag
LatticeFile from_poset(const Poset& p, const std::string& name);
LatticeFile from_lattice(const Lattice& l, const std::string& name);
LatticeFile from_diagram(const PlanarDiagram& d, const std::string& name);

// Graphviz.  Ranks follow heights; planar input keeps its cover order, and the
// natural form pins SR lattices at their grid coordinates.
std::string to_dot(const Lattice& l, const std::string& name);
std::string to_dot(const PlanarDiagram& d, const std::string& name);
std::string to_natural_dot(const PlanarDiagram& d, const std::string& name);

// Stable JSON report: size, classification flags, Con L block lists (sorted by
// least element), J(Con L) covers and, for planar input, the SPS flags.
std::string report_json(const std::string& name, const Lattice& l, const ConLattice& con,
                        const std::optional<PlanarDiagram>& d = std::nullopt);
std::string report_text(const std::string& name, const Lattice& l, const ConLattice& con,
                        const std::optional<PlanarDiagram>& d = std::nullopt, bool full = false);

}  // namespace latw
