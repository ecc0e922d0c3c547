#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "latw/io.hpp"
#include "latw/named.hpp"
#include "oracles.hpp"

using namespace latw;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_lattice_file(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("parse C2 and N5") {
  LatticeFile c2 = parse_lattice_file("lattice C2\nn 2\ncovers 0: 1\n");
  CHECK(c2.n == 2);
  CHECK(c2.up == std::vector<std::vector<int>>{{1}, {}});
  LatticeFile n5 = parse_lattice_file(
      "# N5\nlattice N5\nn 5\nlabels o a b c i\ncovers 0: 1 3\ncovers 1: 2\ncovers 2: 4\ncovers 3: 4\n");
  Lattice l = to_lattice(n5);
  CHECK(l.poset().cover_pairs().size() == 5);
  CHECK(oracle::lattice_isomorphic(l, named::n5()));
  CHECK(l.name(3) == "c");
}

TEST_CASE("diagnostics name the offending line") {
  CHECK(error_line("lattice x\nn 5\ncovers 9: 1\n") == 3);
  CHECK(error_line("lattice x\nn 5\ncovers 0: 7\n") == 3);
  CHECK(error_line("lattice x\nn 3\n\ncovers 0: 1\ncovers 1: 2\n# loop\ncovers 2: 0\n") == 7);
  CHECK(error_line("lattice x\nn 2\ncovers 0 1\n") == 3);
  CHECK(error_line("n 2\n") == 1);
  CHECK(error_line("lattice x\nn 2\nfrobnicate\n") == 3);
  CHECK(error_line("lattice x\nn 2\nlabels a\n") == 3);
  CHECK(error_line("lattice x\nn 2\ncovers 0: 1 1\n") == 3);
  CHECK(error_line("lattice x\nn 2\ncovers 0: 1\ncovers 0: 1\n") == 4);
  // not a lattice: two maximal elements; no line to blame
  CHECK_THROWS_AS(parse_lattice_file("lattice x\nn 3\ncovers 0: 1 2\n"), ParseError);
  CHECK_NOTHROW(parse_lattice_file("poset x\nn 3\ncovers 0: 1 2\n"));
  // planar files must list covers, not implied pairs
  CHECK(error_line("lattice x\nn 3\nplanar\ncovers 0: 1 2\ncovers 1: 2\n") == 4);
}

TEST_CASE("serialize is a normal form") {
  // redundant pair 0 < 2 and unsorted covers disappear
  LatticeFile f = parse_lattice_file("lattice c\nn 3\ncovers 1: 2\ncovers 0: 2 1\n");
  std::string s = serialize(f);
  CHECK(s == "lattice c\nn 3\ncovers 0: 1\ncovers 1: 2\n");
  CHECK(serialize(parse_lattice_file(s)) == s);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      std::string once = serialize(from_lattice(l, "L"));
      LatticeFile back = parse_lattice_file(once);
      CHECK(serialize(back) == once);
      CHECK(to_lattice(back).poset() == l.poset());
    }
}

TEST_CASE("planar files keep their cover order") {
  auto d = find_planar_diagram(named::s7());
  REQUIRE(d);
  LatticeFile f = from_diagram(*d, "S7");
  LatticeFile back = parse_lattice_file(serialize(f));
  CHECK(back.planar);
  PlanarDiagram e = to_diagram(back);
  CHECK(e.upper_lists() == d->upper_lists());
  CHECK(validate_planar(e).valid);
  CHECK_THROWS_AS(to_diagram(from_lattice(named::s7(), "S7")), ParseError);
}

TEST_CASE("shipped corpus matches the named lattices") {
  const std::filesystem::path dir = LATW_CORPUS_DIR;
  for (const auto& name : named::corpus_names()) {
    LatticeFile f = read_lattice_file((dir / (name + ".lat")).string());
    CHECK(f.name == name);
    Lattice l = to_lattice(f);
    Lattice want = named::by_name(name);
    CHECK(l.poset() == want.poset());
    CHECK(l.names() == want.names());
    if (f.planar) CHECK(validate_planar(to_diagram(f)).valid);
  }
  LatticeFile p = read_lattice_file((dir / "two-chain.poset").string());
  CHECK(p.kind == LatticeFile::Kind::Poset);
  CHECK(to_poset(p) == chain_poset(2));
  CHECK_THROWS_AS(read_lattice_file((dir / "missing.lat").string()), ParseError);
}

TEST_CASE("dot export") {
  Lattice n5 = named::n5();
  std::string dot = to_dot(n5, "N5");
  CHECK(dot.find("graph \"N5\"") == 0);
  for (auto [a, b] : n5.poset().cover_pairs())
    CHECK(dot.find(std::to_string(a) + " -- " + std::to_string(b) + ";") != std::string::npos);
  auto d = find_planar_diagram(named::s7());
  std::string nat = to_natural_dot(*d, "S7");
  // the top sits at (2,2) of the 3x3 grid, drawn at height 4
  CHECK(nat.find("label=\"1\", pos=\"0,4!\"") != std::string::npos);
  CHECK(nat.find("[style=bold]") != std::string::npos);
  CHECK_THROWS(to_natural_dot(*find_planar_diagram(named::n5()), "N5"));
}

TEST_CASE("json report is deterministic and ordered") {
  Lattice n5 = named::n5();
  ConLattice c = con_lattice(n5);
  std::string a = report_json("N5", n5, c), b = report_json("N5", n5, c);
  CHECK(a == b);
  CHECK(a.find("\"name\"") < a.find("\"size\""));
  CHECK(a.find("\"congruences\"") < a.find("\"ji\""));
  std::string t = report_text("N5", n5, c, std::nullopt, true);
  CHECK(t.find("Con L: 5 congruences, 3 join-irreducible") != std::string::npos);
  CHECK(t.find("{o},{a,b},{c},{i}") != std::string::npos);
}
