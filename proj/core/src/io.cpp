#include "latw/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace latw {

ParseError::ParseError(std::size_t l, const std::string& d, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + (l ? "line " + std::to_string(l) + ": " : "") + d),
      line(l),
      detail(d) {}

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long to_index(const std::string& t, std::size_t line) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size() || t.empty()) throw ParseError(line, "expected a number, got '" + t + "'");
  return v;
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
  LatticeFile f;
  bool have_header = false, have_n = false;
  std::vector<std::size_t> covers_line;  // element -> line of its covers directive
  std::vector<std::tuple<int, int, std::size_t>> edges;
  std::istringstream in(text);
  std::size_t no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++no;
    auto t = tokens(raw);
    if (t.empty() || t[0][0] == '#') continue;
    const std::string& kw = t[0];
    if (kw == "lattice" || kw == "poset") {
      if (have_header) throw ParseError(no, "second header");
      if (t.size() != 2) throw ParseError(no, "expected '" + kw + " NAME'");
      f.kind = kw == "lattice" ? LatticeFile::Kind::Lattice : LatticeFile::Kind::Poset;
      f.name = t[1];
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(no, "expected 'lattice NAME' or 'poset NAME' first");
    if (kw == "n") {
      if (have_n) throw ParseError(no, "n given twice");
      if (t.size() != 2) throw ParseError(no, "expected 'n COUNT'");
      long v = to_index(t[1], no);
      if (v < 0) throw ParseError(no, "negative count");
      f.n = std::size_t(v);
      f.up.assign(f.n, {});
      covers_line.assign(f.n, 0);
      have_n = true;
    } else if (kw == "planar") {
      if (t.size() != 1) throw ParseError(no, "'planar' takes no arguments");
      f.planar = true;
    } else if (kw == "labels") {
      if (!have_n) throw ParseError(no, "labels before n");
      if (t.size() - 1 != f.n) throw ParseError(no, "expected " + std::to_string(f.n) + " labels");
      f.labels.assign(t.begin() + 1, t.end());
      auto sorted = f.labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError(no, "duplicate label");
    } else if (kw == "covers") {
      if (!have_n) throw ParseError(no, "covers before n");
      if (t.size() < 2 || t[1].back() != ':') throw ParseError(no, "expected 'covers I: J K ...'");
      long i = to_index(t[1].substr(0, t[1].size() - 1), no);
      if (i < 0 || std::size_t(i) >= f.n) throw ParseError(no, "element " + std::to_string(i) + " out of range");
      if (covers_line[i]) throw ParseError(no, "second covers line for " + std::to_string(i));
      covers_line[i] = no;
      for (std::size_t k = 2; k < t.size(); ++k) {
        long j = to_index(t[k], no);
        if (j < 0 || std::size_t(j) >= f.n) throw ParseError(no, "element " + std::to_string(j) + " out of range");
        if (j == i) throw ParseError(no, "cycle: " + std::to_string(i) + " covers itself");
        if (std::find(f.up[i].begin(), f.up[i].end(), int(j)) != f.up[i].end())
          throw ParseError(no, "repeated cover " + std::to_string(j));
        f.up[i].push_back(int(j));
        edges.emplace_back(int(i), int(j), no);
      }
    } else {
      throw ParseError(no, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing header");
  if (!have_n) throw ParseError(0, "missing 'n COUNT'");
  // the first edge closing a cycle names the line
  std::vector<std::vector<int>> succ(f.n);
  std::vector<int> mark(f.n, -1);
  int stamp = 0;
  std::function<bool(int, int)> reaches = [&](int from, int to) {
    if (from == to) return true;
    mark[from] = stamp;
    for (int w : succ[from])
      if (mark[w] != stamp && reaches(w, to)) return true;
    return false;
  };
  for (auto [a, b, line] : edges) {
    ++stamp;
    if (reaches(b, a)) throw ParseError(line, "cycle through " + std::to_string(a) + " and " + std::to_string(b));
    succ[a].push_back(b);
  }
  if (f.planar) {
    Poset p = to_poset(f);
    for (std::size_t x = 0; x < f.n; ++x) {
      auto want = p.upper_covers(int(x)), got = f.up[x];
      std::sort(got.begin(), got.end());
      if (want != got) throw ParseError(covers_line[x] ? covers_line[x] : 0,
                                        "planar files must list exactly the upper covers of " + std::to_string(x));
    }
  }
  if (f.kind == LatticeFile::Kind::Lattice) to_lattice(f);
  return f;
}

std::string serialize(const LatticeFile& f) {
  std::ostringstream out;
  out << (f.kind == LatticeFile::Kind::Lattice ? "lattice " : "poset ") << f.name << "\n";
  out << "n " << f.n << "\n";
  if (f.planar) out << "planar\n";
  if (!f.labels.empty()) {
    out << "labels";
    for (const auto& s : f.labels) out << ' ' << s;
    out << "\n";
  }
  // reduce to covers so redundant pairs do not survive a round trip
  Poset p = to_poset(f);
  for (std::size_t x = 0; x < f.n; ++x) {
    std::vector<int> up;
    if (f.planar) {
      up = f.up[x];
    } else {
      up = p.upper_covers(int(x));
      std::sort(up.begin(), up.end());
    }
    if (up.empty()) continue;
    out << "covers " << x << ":";
    for (int y : up) out << ' ' << y;
    out << "\n";
  }
  return out.str();
}

LatticeFile read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_lattice_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.detail, path);
  }
}

Poset to_poset(const LatticeFile& f) {
  std::vector<CoverPair> pairs;
  for (std::size_t x = 0; x < f.up.size(); ++x)
    for (int y : f.up[x]) pairs.emplace_back(int(x), y);
  try {
    return Poset::from_covers(f.n, pairs);
  } catch (const OrderError& e) {
    throw ParseError(0, e.what());
  }
}

Lattice to_lattice(const LatticeFile& f) {
  try {
    Lattice l = Lattice::from_poset(to_poset(f));
    if (!f.labels.empty()) l.set_names(f.labels);
    return l;
  } catch (const OrderError& e) {
    throw ParseError(0, std::string("not a lattice: ") + e.what());
  }
}

PlanarDiagram to_diagram(const LatticeFile& f) {
  if (!f.planar) throw ParseError(0, "file has no 'planar' flag");
  return PlanarDiagram(to_lattice(f), f.up);
}

LatticeFile from_poset(const Poset& p, const std::string& name) {
  LatticeFile f;
  f.kind = LatticeFile::Kind::Poset;
  f.name = name;
  f.n = p.size();
  f.up.resize(f.n);
  for (std::size_t x = 0; x < f.n; ++x) f.up[x] = p.upper_covers(int(x));
  return f;
}

LatticeFile from_lattice(const Lattice& l, const std::string& name) {
  LatticeFile f = from_poset(l.poset(), name);
  f.kind = LatticeFile::Kind::Lattice;
  if (l.names().empty()) return f;
  for (int x = 0; x < int(l.size()); ++x) f.labels.push_back(l.name(x));
  // labels must be unique single tokens; otherwise indices alone
  auto sorted = f.labels;
  std::sort(sorted.begin(), sorted.end());
  bool bad = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  for (const auto& s : f.labels) bad = bad || s.find_first_of(" \t#") != std::string::npos;
  if (bad) f.labels.clear();
  return f;
}

LatticeFile from_diagram(const PlanarDiagram& d, const std::string& name) {
  LatticeFile f = from_lattice(d.lattice(), name);
  f.planar = true;
  f.up = d.upper_lists();
  return f;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void dot_body(std::ostringstream& out, const Lattice& l, const std::vector<std::string>& attrs) {
  for (std::size_t x = 0; x < l.size(); ++x)
    out << "  " << x << " [label=" << quoted(l.name(int(x))) << attrs[x] << "];\n";
}

}  // namespace

std::string to_dot(const Lattice& l, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  dot_body(out, l, std::vector<std::string>(l.size()));
  // same height, same rank
  std::map<int, std::vector<int>> ranks;
  for (int x = 0; x < int(l.size()); ++x) ranks[l.poset().height(x)].push_back(x);
  for (const auto& [h, xs] : ranks) {
    out << "  { rank=same;";
    for (int x : xs) out << ' ' << x << ';';
    out << " }\n";
  }
  for (auto [a, b] : l.poset().cover_pairs()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const PlanarDiagram& d, const std::string& name) {
  const Lattice& l = d.lattice();
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n  rankdir=BT;\n  ordering=out;\n  node [shape=circle];\n";
  dot_body(out, l, std::vector<std::string>(l.size()));
  for (int x : l.poset().topological())
    for (int y : d.upper(x)) out << "  " << x << " -- " << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_natural_dot(const PlanarDiagram& d, const std::string& name) {
  NaturalDiagram nd = natural_diagram(d);
  const Lattice& l = d.lattice();
  std::vector<std::string> attrs(l.size());
  for (int x = 0; x < int(l.size()); ++x) {
    auto [px, py] = nd.position(x);
    auto [i, j] = nd.coords[x];
    attrs[x] = ", pos=\"" + std::to_string(px) + "," + std::to_string(py) + "!\", xlabel=\"(" + std::to_string(i) +
               "," + std::to_string(j) + ")\"";
  }
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n  layout=neato;\n  node [shape=circle];\n";
  dot_body(out, l, attrs);
  for (auto e : l.poset().cover_pairs())
    out << "  " << e.first << " -- " << e.second << (nd.steep(e) ? " [style=bold]" : "") << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::ordered_json blocks_json(const Lattice& l, const Congruence& c) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : c.blocks()) {
    auto blk = nlohmann::ordered_json::array();
    for (int x : b) blk.push_back(l.name(x));
    arr.push_back(blk);
  }
  return arr;
}

nlohmann::ordered_json report(const std::string& name, const Lattice& l, const ConLattice& con,
                              const std::optional<PlanarDiagram>& d) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["size"] = l.size();
  ClassReport c = classify(l);
  j["class"] = {{"distributive", c.distributive},
                {"modular", c.modular},
                {"upper_semimodular", c.upper_semimodular},
                {"lower_semimodular", c.lower_semimodular},
                {"join_semidistributive", c.join_semidistributive},
                {"meet_semidistributive", c.meet_semidistributive},
                {"complemented", c.complemented},
                {"sectionally_complemented", c.sectionally_complemented},
                {"relatively_complemented", c.relatively_complemented},
                {"atomistic", c.atomistic}};
  Subdirect s = subdirect(l);
  j["simple"] = s.simple;
  j["subdirectly_irreducible"] = s.subdirectly_irreducible;
  auto congs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < con.size(); ++i) congs.push_back(blocks_json(l, con.congruences[i]));
  j["congruences"] = congs;
  auto ji = nlohmann::ordered_json::array();
  for (int k : con.ji) ji.push_back(k);
  j["ji"] = ji;
  auto jc = nlohmann::ordered_json::array();
  for (auto [a, b] : con.ji_poset.cover_pairs()) jc.push_back({con.ji[a], con.ji[b]});
  j["ji_covers"] = jc;
  if (d) {
    SPSReport r = sps_predicates(*d);
    j["planar"] = {{"planar", r.planar}, {"slim", r.slim},         {"semimodular", r.semimodular},
                   {"sps", r.sps},       {"rectangular", r.rectangular}, {"sr", r.sr},
                   {"patch", r.patch}};
  }
  return j;
}

}  // namespace

std::string report_json(const std::string& name, const Lattice& l, const ConLattice& con,
                        const std::optional<PlanarDiagram>& d) {
  return report(name, l, con, d).dump(2) + "\n";
}

std::string report_text(const std::string& name, const Lattice& l, const ConLattice& con,
                        const std::optional<PlanarDiagram>& d, bool full) {
  auto j = report(name, l, con, d);
  std::ostringstream out;
  out << name << ": " << l.size() << " elements\n";
  out << "class:";
  for (const auto& [k, v] : j["class"].items())
    if (v.get<bool>()) out << ' ' << k;
  if (j["simple"].get<bool>()) out << " simple";
  else if (j["subdirectly_irreducible"].get<bool>()) out << " subdirectly_irreducible";
  out << "\n";
  if (d) {
    out << "planar:";
    for (const auto& [k, v] : j["planar"].items())
      if (v.get<bool>()) out << ' ' << k;
    out << "\n";
  }
  out << "Con L: " << con.size() << " congruences, " << con.ji.size() << " join-irreducible\n";
  if (full) {
    for (std::size_t i = 0; i < con.size(); ++i) {
      bool is_ji = std::find(con.ji.begin(), con.ji.end(), int(i)) != con.ji.end();
      out << "  " << i << (is_ji ? "* " : "  ") << to_string(l, con.congruences[i]) << "\n";
    }
    out << "J(Con L) covers:";
    auto cp = con.ji_poset.cover_pairs();
    if (cp.empty()) out << " none";
    for (auto [a, b] : cp) out << ' ' << con.ji[a] << "<" << con.ji[b];
    out << "\n";
  }
  return out.str();
}

}  // namespace latw
