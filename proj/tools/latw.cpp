// latw: command-line front end for the lattice/congruence library.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "latw/basic_rt.hpp"
#include "latw/chopped.hpp"
#include "latw/cube.hpp"
#include "latw/io.hpp"
#include "latw/named.hpp"
#include "latw/triples.hpp"
#include "suite.hpp"

using namespace latw;

namespace {

// A lattice argument is a file path or a corpus name such as N5 or grid3x4.
LatticeFile load(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_lattice_file(arg);
  try {
    return from_lattice(named::by_name(arg), arg);
  } catch (const OrderError&) {
    throw ParseError(0, "no such file or named lattice: " + arg);
  }
}

Lattice load_lattice(const std::string& arg) { return to_lattice(load(arg)); }

std::optional<PlanarDiagram> diagram_of(const LatticeFile& f) {
  if (f.planar) return to_diagram(f);
  return std::nullopt;
}

int element(const Lattice& l, const std::string& s) {
  if (auto x = l.find(s)) return *x;
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 0 && std::size_t(v) < l.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(0, "unknown element " + s);
}

// "C3", "B2", or just the count.
std::string con_shape(const ConLattice& c) {
  const int k = int(c.ji.size());
  bool chain = true, anti = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) (c.ji_poset.comparable(a, b) ? anti : chain) = false;
  if (chain) return "C" + std::to_string(c.size());
  if (anti) return "B" + std::to_string(k);
  return std::to_string(c.size()) + " congruences";
}

void emit(const Lattice& l, const std::string& name, const std::vector<std::string>& stamp) {
  for (const auto& s : stamp) std::cout << "# " << s << "\n";
  std::cout << serialize(from_lattice(l, name));
}

int cmd_check(const std::string& file, bool json) {
  LatticeFile f = load(file);
  Lattice l = to_lattice(f);
  ConLattice c = con_lattice(l);
  std::cout << (json ? report_json(f.name, l, c, diagram_of(f)) : report_text(f.name, l, c, diagram_of(f)));
  return 0;
}

int cmd_con(const std::string& file, bool json) {
  LatticeFile f = load(file);
  Lattice l = to_lattice(f);
  ConLattice c = con_lattice(l);
  std::cout << (json ? report_json(f.name, l, c, diagram_of(f)) : report_text(f.name, l, c, diagram_of(f), true));
  return 0;
}

int cmd_construct(const std::string& op, const std::vector<std::string>& args, const std::string& filter,
                  const std::string& ideal, const std::string& shared, int cell) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParseError(0, op + " takes " + std::to_string(n) + " argument(s)");
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string t; std::getline(in, t, ',');)
      if (!t.empty()) out.push_back(t);
    return out;
  };
  if (op == "product") {
    need(2);
    Lattice a = load_lattice(args[0]), b = load_lattice(args[1]);
    Product p = direct_product(a, b);
    std::vector<std::string> names;
    for (int x = 0; x < int(p.lattice.size()); ++x) {
      auto c = p.coords(x);
      names.push_back(a.name(c[0]) + "," + b.name(c[1]));
    }
    p.lattice.set_names(names);
    ConLattice ca = con_lattice(a), cb = con_lattice(b), cp = con_lattice(p.lattice);
    emit(p.lattice, "product", {"verified: |Con(LxK)| = " + std::to_string(cp.size()) + " = " +
                                    std::to_string(ca.size()) + " x " + std::to_string(cb.size())});
    return cp.size() == ca.size() * cb.size() ? 0 : 1;
  }
  if (op == "gluing") {
    need(2);
    Lattice k = load_lattice(args[0]), l = load_lattice(args[1]);
    std::vector<int> f{k.one()}, phi{l.zero()};
    if (!filter.empty() || !ideal.empty()) {
      f.clear();
      phi.clear();
      for (const auto& s : split(filter)) f.push_back(element(k, s));
      for (const auto& s : split(ideal)) phi.push_back(element(l, s));
    }
    Gluing g = glue(k, l, f, phi);
    std::vector<std::string> names(g.lattice.size());
    for (int x = 0; x < int(l.size()); ++x) names[g.from_l[x]] = l.name(x) + "'";
    for (int x = 0; x < int(k.size()); ++x) names[g.from_k[x]] = k.name(x);
    g.lattice.set_names(names);
    emit(g.lattice, "gluing", {"verified: |Con G| = " + std::to_string(con_lattice(g.lattice).size())});
    return 0;
  }
  if (op == "merge") {
    need(2);
    Lattice c = load_lattice(args[0]), d = load_lattice(args[1]);
    std::vector<std::pair<int, int>> pairs{{c.zero(), d.zero()}};
    for (const auto& s : split(shared)) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(0, "--shared expects x=y pairs");
      pairs.emplace_back(element(c, s.substr(0, eq)), element(d, s.substr(eq + 1)));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Merge m = merge(c, d, pairs);
    IdealLattice id = ideal_lattice(m.chopped);
    auto cm = chopped_congruences(m.chopped);
    ConLattice ci = con_lattice(id.lattice);
    emit(id.lattice, "IdM", {"Id M of the merge (" + std::to_string(m.chopped.size()) + " elements in M)",
                             "verified: |Con M| = |Con Id M| = " + std::to_string(ci.size())});
    return cm.size() == ci.size() ? 0 : 1;
  }
  if (op == "m3") {
    need(1);
    Lattice l = load_lattice(args[0]);
    Triples t = boolean_triples(l);
    std::vector<std::string> names;
    for (const auto& v : t.triples) names.push_back("(" + l.name(v[0]) + "," + l.name(v[1]) + "," + l.name(v[2]) + ")");
    t.lattice.set_names(names);
    bool ok = extension_class(t.lattice, t.gamma).preserving;
    emit(t.lattice, "M3", {std::string("verified: congruence-preserving extension of L: ") + (ok ? "yes" : "NO")});
    return ok ? 0 : 1;
  }
  if (op == "cube") {
    need(1);
    Lattice k = load_lattice(args[0]);
    CubicExtension c = cubic_extension(k);
    ConLattice cc = con_lattice(c.lattice());
    bool ok = extension_class(c.lattice(), c.diag).reflecting;
    emit(c.lattice(), "Cube", {"Con Cube K = " + con_shape(cc) + ", |Con_M K| = " + std::to_string(c.meet_irreducibles.size()),
                               std::string("verified: Diag K congruence-reflecting: ") + (ok ? "yes" : "NO")});
    return ok ? 0 : 1;
  }
  if (op == "fork") {
    need(1);
    LatticeFile f = load(args[0]);
    PlanarDiagram d = f.planar ? to_diagram(f) : [&] {
      auto found = find_planar_diagram(to_lattice(f));
      if (!found) throw ParseError(0, "not planar");
      return *found;
    }();
    auto fc = four_cells(d);
    if (cell < 0 || std::size_t(cell) >= fc.size())
      throw ParseError(0, "cell index out of range (" + std::to_string(fc.size()) + " four-cells)");
    ForkInsertion ins = insert_fork(d, fc[cell]);
    SPSReport r = sps_predicates(ins.diagram);
    for (const auto& s : {std::string("fork at 4-cell ") + std::to_string(cell),
                          std::string("verified: SPS ") + (r.sps ? "yes" : "NO") + ", SR " + (r.sr ? "yes" : "no")})
      std::cout << "# " << s << "\n";
    std::cout << serialize(from_diagram(ins.diagram, f.name + "-fork"));
    return r.sps ? 0 : 1;
  }
  if (op == "basic-rt") {
    need(1);
    LatticeFile f = load(args[0]);
    Poset p = to_poset(f);
    BasicRT rt = basic_rt(p);
    BasicRTCheck c = verify_basic_rt(p, rt);
    ConLattice cl = con_lattice(rt.lattice);
    bool ok = c.sectionally_complemented && c.ji_isomorphic;
    emit(rt.lattice, "rt-" + f.name,
         {"Con L = " + con_shape(cl),
          std::string("verified: sectionally complemented ") + (c.sectionally_complemented ? "yes" : "NO") +
              ", J(Con L) = P " + (c.ji_isomorphic ? "yes" : "NO")});
    return ok ? 0 : 1;
  }
  throw ParseError(0, "unknown construction " + op + " (product, gluing, merge, m3, cube, fork, basic-rt)");
}

int cmd_enumerate(std::size_t n, bool json) {
  auto ls = enumerate_lattices(n);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["count"] = ls.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& l : ls) {
      auto covers = nlohmann::ordered_json::array();
      for (auto [a, b] : l.poset().cover_pairs()) covers.push_back({a, b});
      arr.push_back({{"covers", covers}, {"congruences", con_lattice(l).size()}});
    }
    j["lattices"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << ls.size() << " lattices with " << n << " elements\n";
  for (std::size_t k = 0; k < ls.size(); ++k) std::cout << "\n" << serialize(from_lattice(ls[k], "L" + std::to_string(n) + "_" + std::to_string(k)));
  return 0;
}

int cmd_export_dot(const std::string& file, bool natural) {
  LatticeFile f = load(file);
  Lattice l = to_lattice(f);
  if (!natural) {
    std::cout << (f.planar ? to_dot(to_diagram(f), f.name) : to_dot(l, f.name));
    return 0;
  }
  PlanarDiagram d = f.planar ? to_diagram(f) : [&] {
    auto found = find_planar_diagram(l);
    if (!found) throw ParseError(0, "not planar");
    return *found;
  }();
  std::cout << to_natural_dot(d, f.name);
  return 0;
}

int cmd_verify(const suite::Options& o, bool json) {
  auto rows = suite::run_all(o);
  bool all = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    all = all && r.pass;
    if (json) {
      arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      continue;
    }
    std::cout << std::setw(2) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.detail
              << "; " << std::fixed << std::setprecision(1) << r.seconds << " s]\n";
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latw: finite lattices, congruences and planar semimodular diagrams"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured output");

  std::string file;
  auto* check = app.add_subcommand("check", "classify a lattice and summarize Con L");
  check->add_option("file", file, "lattice file or corpus name")->required();
  auto* con = app.add_subcommand("con", "full congruence lattice report");
  con->add_option("file", file, "lattice file or corpus name")->required();

  std::string op, filter, ideal, shared;
  std::vector<std::string> args;
  int cell = 0;
  auto* construct = app.add_subcommand("construct", "product, gluing, merge, m3, cube, fork, basic-rt");
  construct->add_option("op", op)->required();
  construct->add_option("args", args, "lattice files, corpus names or a poset file");
  construct->add_option("--filter", filter, "gluing: comma-separated filter of the first lattice");
  construct->add_option("--ideal", ideal, "gluing: images of the filter in the second lattice");
  construct->add_option("--shared", shared, "merge: x=y pairs identified besides the zeros");
  construct->add_option("--cell", cell, "fork: index of the 4-cell");

  std::size_t n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "all lattices of N elements up to isomorphism");
  enumerate->add_option("N", n)->required()->check(CLI::Range(1, 8));

  bool natural = false;
  auto* dot = app.add_subcommand("export-dot", "Graphviz diagram");
  dot->add_option("file", file, "lattice file or corpus name")->required();
  dot->add_flag("--natural", natural, "natural diagram of an SR lattice");

  suite::Options o;
  auto* verify = app.add_subcommand("verify-suite", "run the invariant battery");
  verify->add_option("--max-n", o.max_n, "enumeration bound")->check(CLI::Range(1, 8));
  verify->add_option("--oracle-n", o.oracle_n, "brute-force partition bound")->check(CLI::Range(1, 7));
  verify->add_option("--poset-n", o.poset_n, "Basic RT poset bound")->check(CLI::Range(1, 6));
  verify->add_option("--seed", o.seed, "first seed of the generated SR lattices");

  for (auto* sub : {check, con, construct, enumerate, dot, verify}) sub->add_flag("--json", json, "structured output");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*check) return cmd_check(file, json);
    if (*con) return cmd_con(file, json);
    if (*construct) return cmd_construct(op, args, filter, ideal, shared, cell);
    if (*enumerate) return cmd_enumerate(n, json);
    if (*dot) return cmd_export_dot(file, natural);
    if (*verify) return cmd_verify(o, json);
  } catch (const std::exception& e) {
    std::cerr << "latw: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
