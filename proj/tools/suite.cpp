#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "latw/basic_rt.hpp"
#include "latw/chopped.hpp"
#include "latw/cube.hpp"
#include "latw/named.hpp"
#include "latw/planar.hpp"
#include "latw/triples.hpp"

namespace latw::suite {

namespace {

// Collects the first failure; later ones only bump the count.
struct Tally {
  std::size_t checked = 0, failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (!failed) first = what;
    ++failed;
  }
};

Row finish(Row r, const Tally& t, const std::string& counts) {
  r.pass = t.failed == 0 && t.checked > 0;
  r.detail = r.pass ? counts : std::to_string(t.failed) + " failures; first: " + t.first;
  if (t.checked == 0) r.detail = "nothing checked";
  return r;
}

std::vector<Lattice> upto(std::size_t lo, std::size_t hi) {
  std::vector<Lattice> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& l : enumerate_lattices(n)) out.push_back(std::move(l));
  return out;
}

// Restricted growth strings = partitions in canonical block numbering.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int mx) {
    if (i == n) return f(s);
    for (int v = 0; v <= mx + 1; ++v) {
      s[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  if (n == 0) return f(s);
  rec(1, 0);
}

bool poset_iso(const Poset& a, const Poset& b) { return are_isomorphic(a, b).has_value(); }

std::vector<PlanarDiagram> generated_sr(std::uint64_t seed) {
  std::vector<PlanarDiagram> out;
  for (std::uint64_t s = seed; s < seed + 10; ++s) out.push_back(random_sr(2 + s % 3, 2 + s % 2, 1 + s % 4, s));
  return out;
}

Row oracle_equivalence(const Options& o) {
  Row r{1, "con_lattice equals the brute-force partition filter (n <= " + std::to_string(o.oracle_n) + ")"};
  Tally t;
  std::size_t parts = 0, lattices = 0;
  for (const auto& l : upto(1, o.oracle_n)) {
    ++lattices;
    std::vector<Congruence> brute;
    for_each_partition(l.size(), [&](const std::vector<int>& s) {
      ++parts;
      Congruence c(s);
      if (is_congruence(l, c)) brute.push_back(c);
    });
    std::sort(brute.begin(), brute.end());
    t.check(brute == con_lattice(l).congruences, "lattice of size " + std::to_string(l.size()));
  }
  return finish(r, t, std::to_string(lattices) + " lattices, " + std::to_string(parts) + " partitions tested");
}

Row funayama_nakayama(const Options& o) {
  Row r{2, "Con L is distributive (n <= " + std::to_string(o.max_n) + ")"};
  Tally t;
  for (const auto& l : upto(1, o.max_n)) t.check(classify(con_lattice(l).lattice).distributive, "size " + std::to_string(l.size()));
  return finish(r, t, std::to_string(t.checked) + " lattices");
}

Row n5_reproduction(const Options&) {
  Row r{3, "Con N5: 5 congruences, J(Con N5) = {alpha < beta, alpha < gamma}, principal blocks"};
  Tally t;
  Lattice n5 = named::n5();
  ConLattice cl = con_lattice(n5);
  t.check(cl.size() == 5, "|Con N5| = " + std::to_string(cl.size()));
  // α = con(a,b) sits below β = con(o,c) and γ = con(o,a); β ∥ γ
  Poset j = Poset::from_covers(3, {{0, 1}, {0, 2}});
  t.check(poset_iso(cl.ji_poset, j), "J(Con N5) shape");
  auto at = [&](const char* s) { return n5.at(s); };
  Congruence ab = principal(n5, at("a"), at("b")), oc = principal(n5, at("o"), at("c"));
  t.check(ab == Congruence::from_blocks(5, {{at("o")}, {at("a"), at("b")}, {at("c")}, {at("i")}}),
          "con(a,b) = " + to_string(n5, ab));
  t.check(oc == Congruence::from_blocks(5, {{at("o"), at("c")}, {at("a"), at("b"), at("i")}}),
          "con(o,c) = " + to_string(n5, oc));
  Congruence oa = principal(n5, at("o"), at("a"));
  auto pos = [&](const Congruence& c) {
    auto it = std::find(cl.ji.begin(), cl.ji.end(), cl.index_of(c));
    return it == cl.ji.end() ? -1 : int(it - cl.ji.begin());
  };
  int pa = pos(ab), pb = pos(oc), pg = pos(oa);
  t.check(pa >= 0 && pb >= 0 && pg >= 0, "principal congruences are join-irreducible");
  if (pa >= 0 && pb >= 0 && pg >= 0) {
    t.check(cl.ji_poset.lt(pa, pb) && cl.ji_poset.lt(pa, pg), "alpha below beta and gamma");
    t.check(cl.ji_poset.parallel(pb, pg), "beta parallel to gamma");
  }
  return finish(r, t, "exact match");
}

Row modular_boolean(const Options& o) {
  Row r{4, "modular L has Con L = B_k (n <= " + std::to_string(o.max_n) + ")"};
  Tally t;
  std::size_t modular = 0;
  for (const auto& l : upto(1, o.max_n)) {
    if (!is_modular(l)) continue;
    ++modular;
    ConLattice cl = con_lattice(l);
    t.check(poset_iso(cl.lattice.poset(), named::boolean(cl.ji.size()).poset()),
            "modular lattice of size " + std::to_string(l.size()));
  }
  return finish(r, t, std::to_string(modular) + " modular lattices");
}

Row product_congruences(const Options&) {
  Row r{5, "Con(L x K) = Con L x Con K on 20 corpus pairs, isomorphism exhibited"};
  Tally t;
  auto names = named::corpus_names();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < names.size() && pairs < 20; ++i)
    for (std::size_t k = i; k < names.size() && pairs < 20; ++k) {
      Lattice a = named::by_name(names[i]), b = named::by_name(names[k]);
      if (a.size() * b.size() > 64) continue;
      ++pairs;
      Product p = direct_product(a, b);
      ConLattice ca = con_lattice(a), cb = con_lattice(b), cp = con_lattice(p.lattice);
      Product cc = direct_product(ca.lattice, cb.lattice);
      std::vector<int> map(cc.lattice.size());
      for (int x = 0; x < int(map.size()); ++x) {
        auto xy = cc.coords(x);
        map[x] = cp.index_of(product_congruence(p, {ca.congruences[xy[0]], cb.congruences[xy[1]]}));
      }
      const std::string what = names[i] + " x " + names[k];
      t.check(std::find(map.begin(), map.end(), -1) == map.end() && cc.lattice.size() == cp.size() &&
                  is_order_isomorphism(cc.lattice.poset(), cp.lattice.poset(), map),
              what);
    }
  t.check(pairs == 20, "only " + std::to_string(pairs) + " pairs fit");
  return finish(r, t, std::to_string(pairs) + " pairs");
}

std::vector<std::pair<std::string, Merge>> chopped_samples() {
  std::vector<std::pair<std::string, Merge>> out;
  Lattice c2 = named::chain(2), c3 = named::chain(3), b2 = named::boolean(2);
  Lattice n5 = named::n5(), n6 = named::n6(), m3 = named::m3();
  out.emplace_back("C2+C2", merge(c2, c2, {{0, 0}}));
  out.emplace_back("C3+C3", merge(c3, c3, {{0, 0}, {1, 1}}));
  out.emplace_back("B2+B2", merge(b2, b2, {{0, 0}, {1, 1}}));
  out.emplace_back("N5.a+N5.c", atom_merge(n5, n5.at("a"), n5, n5.at("c")));
  out.emplace_back("N6.q1+N6.p", atom_merge(n6, n6.at("q1"), n6, n6.at("p")));
  out.emplace_back("M3.a+B2", atom_merge(m3, m3.at("a"), b2, 1));
  out.emplace_back("N5.c+M3.b", atom_merge(n5, n5.at("c"), m3, m3.at("b")));
  out.emplace_back("M3.a+M3.b", atom_merge(m3, m3.at("a"), m3, m3.at("b")));
  out.emplace_back("N5+N5 over [o,b]",
                   merge(n5, n5, {{n5.at("o"), n5.at("o")}, {n5.at("a"), n5.at("a")}, {n5.at("b"), n5.at("b")}}));
  out.emplace_back("C2+C2+C2", merge({c2, c2, c2}, {{0, 1}, {0, 2}, {0, 3}}));
  out.emplace_back("N6+C3+B2", merge({n6, c3, b2}, {{0, 1, 2, 3, 4, 5}, {0, 1, 6}, {0, 2, 7, 8}}));
  out.emplace_back("sectionally complemented pair", sc_counterexample());
  return out;
}

Row chopped(const Options&) {
  Row r{6, "Con M = Con Id M for chopped lattices; Id M of the SC pair is not SC at (a,b)"};
  Tally t;
  auto samples = chopped_samples();
  for (const auto& [name, mg] : samples) {
    const auto& m = mg.chopped;
    IdealLattice id = ideal_lattice(m);
    auto cm = chopped_congruences(m).congruences;
    auto cid = con_lattice(id.lattice);
    std::set<Congruence> images;
    bool ok = true;
    for (const auto& a : cm) {
      Congruence ext = ideal_extension(m, id, a);
      ok = ok && is_congruence(id.lattice, ext) && restrict(id.lattice, id.embed, ext) == a;
      images.insert(ext);
    }
    for (const auto& a : cm)
      for (const auto& b : cm) ok = ok && a.refines(b) == ideal_extension(m, id, a).refines(ideal_extension(m, id, b));
    ok = ok && images.size() == cm.size() &&
         images == std::set<Congruence>(cid.congruences.begin(), cid.congruences.end());
    t.check(ok, name);
  }
  Merge mg = sc_counterexample();
  const auto& m = mg.chopped;
  t.check(m.max_elements().size() == 2 && is_sectionally_complemented(m.piece(0)) &&
              is_sectionally_complemented(m.piece(1)),
          "pieces of the SC pair are sectionally complemented");
  IdealLattice id = ideal_lattice(m);
  int ab = id.index_of({m.at("a"), m.at("b")});
  t.check(ab >= 0 && !complement_in(id.lattice, ab, id.lattice.zero(), id.lattice.one()),
          "(a,b) has no complement in Id M");
  t.check(!is_sectionally_complemented(id.lattice), "Id M is not sectionally complemented");
  return finish(r, t, std::to_string(samples.size()) + " chopped lattices; (a,b) has no complement");
}

// α ↦ α³ hits every congruence of the extension exactly once.
bool bijective_images(const Lattice& l, const Triples& t) {
  std::vector<Congruence> made;
  for (const auto& a : con_lattice(l).congruences) {
    Congruence c = triple_congruence(l, t, a);
    if (!is_congruence(t.lattice, c)) return false;
    made.push_back(c);
  }
  std::sort(made.begin(), made.end());
  return std::adjacent_find(made.begin(), made.end()) == made.end() && made == con_lattice(t.lattice).congruences;
}

Row boolean_triples_row(const Options&) {
  Row r{7, "M3[L], M3[L,a], M3[L,a,b] are congruence-preserving; I/F synchronized"};
  Tally t;
  std::size_t lattices = 0, extensions = 0;
  for (const auto& name : named::corpus_names()) {
    Lattice l = named::by_name(name);
    Triples m = boolean_triples(l);
    if (m.lattice.size() > 200) continue;
    ++lattices;
    ++extensions;
    t.check(extension_class(m.lattice, m.gamma).preserving && bijective_images(l, m), "M3[" + name + "]");
    auto cl = con_lattice(l).congruences;
    for (int a = 0; a < int(l.size()); ++a) {
      TripleInterval ta = boolean_triples_interval(l, a);
      ++extensions;
      t.check(extension_class(ta.lattice, ta.gamma).preserving && bijective_images(l, ta),
              "M3[" + name + "," + l.name(a) + "]");
      for (int b = 0; b < int(l.size()); ++b) {
        if (!l.lt(a, b)) continue;
        TripleInterval tab = boolean_triples_interval(l, a, b);
        if (tab.lattice.size() > 200) continue;
        ++extensions;
        bool ok = extension_class(tab.lattice, tab.gamma).preserving && extension_class(tab.lattice, tab.f_of).preserving;
        for (const auto& al : cl) ok = ok && synchronized(l, tab, al);
        t.check(ok, "M3[" + name + "," + l.name(a) + "," + l.name(b) + "]");
      }
    }
  }
  return finish(r, t, std::to_string(lattices) + " lattices, " + std::to_string(extensions) + " extensions");
}

Row cubic(const Options&) {
  Row r{8, "Diag(K) congruence-reflecting in Cube K, |Con Cube K| = 2^|Con_M K|, Con Cube N6 = B2"};
  Tally t;
  for (const auto& name : {"N5", "N6", "N55", "B2", "C4"}) {
    Lattice k = named::by_name(name);
    CubicExtension c = cubic_extension(k);
    std::size_t m = subdirect(k).meet_irreducible.size();
    t.check(extension_class(c.lattice(), c.diag).reflecting, std::string(name) + ": Diag not reflecting");
    t.check(con_lattice(c.lattice()).size() == (std::size_t(1) << m), std::string(name) + ": |Con Cube K|");
  }
  ConLattice cn6 = con_lattice(cubic_extension(named::n6()).lattice());
  t.check(poset_iso(cn6.lattice.poset(), named::boolean(2).poset()), "Con Cube N6 is not B2");
  return finish(r, t, "5 lattices + Cube N6");
}

Row basic_rt_row(const Options& o) {
  Row r{9, "Basic RT: L sectionally complemented, J(Con L) = P (|P| <= " + std::to_string(o.poset_n) + ")"};
  Tally t;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= o.poset_n; ++n)
    for (const auto& p : enumerate_posets(n)) {
      ++count;
      BasicRTCheck c = verify_basic_rt(p, basic_rt(p));
      t.check(c.sectionally_complemented && c.ji_isomorphic && c.atom_map,
              "poset with " + std::to_string(n) + " elements, " + std::to_string(p.cover_pairs().size()) + " covers");
    }
  return finish(r, t, std::to_string(count) + " posets");
}

Row sps(const Options& o) {
  Row r{10, "SPS: B2 fork = S7, decompose/replay, natural diagrams, coordinatization, two covers"};
  Tally t;
  PlanarDiagram b2 = grid_diagram(2, 2);
  ForkInsertion f = insert_fork(b2, four_cells(b2).front());
  t.check(f.diagram.size() == 7 && sps_predicates(f.diagram).sr && poset_iso(f.diagram.lattice().poset(), named::s7().poset()),
          "fork into B2");

  auto gen = generated_sr(o.seed);
  for (std::size_t k = 0; k < gen.size(); ++k) {
    const auto& d = gen[k];
    StructureDecomposition s = structure_decompose(d);
    PlanarDiagram back = replay(s);
    t.check(is_order_isomorphism(back.lattice().poset(), d.lattice().poset(), s.replay_to_input),
            "decompose/replay of generated lattice " + std::to_string(k));
  }

  std::vector<std::pair<std::string, PlanarDiagram>> rect;
  for (const auto& name : named::corpus_names()) {
    Lattice l = named::by_name(name);
    auto d = find_planar_diagram(l);
    if (!d) continue;
    SPSReport rep = sps_predicates(*d);
    if (rep.sps) {
      std::size_t most = 0;
      for (int x = 0; x < int(l.size()); ++x) most = std::max(most, d->upper(x).size());
      t.check(most <= 2, name + " has an element with " + std::to_string(most) + " covers");
    }
    if (rep.sr && l.size() <= 30) rect.emplace_back(name, *d);
  }
  for (std::size_t k = 0; k < gen.size(); ++k) {
    std::size_t most = 0;
    for (int x = 0; x < int(gen[k].size()); ++x) most = std::max(most, gen[k].upper(x).size());
    t.check(most <= 2, "generated lattice " + std::to_string(k) + " breaks the two-cover bound");
    if (gen[k].size() <= 30) rect.emplace_back("generated " + std::to_string(k), gen[k]);
  }

  std::size_t congs = 0;
  for (const auto& [name, d] : rect) {
    NaturalDiagram nd = natural_diagram(d);
    t.check(nd.injective && nd.meet_preserving && nd.bounds_preserved && c1_violations(d, nd).empty(),
            name + ": natural diagram");
    for (const auto& a : con_lattice(d.lattice()).congruences) {
      ++congs;
      t.check(coordinatize_congruence(d, a).exact, name + ": coordinatization");
    }
  }
  return finish(r, t,
                std::to_string(gen.size()) + " generated, " + std::to_string(rect.size()) + " rectangular lattices, " +
                    std::to_string(congs) + " congruences");
}

Row semidistributive(const Options& o) {
  Row r{11, "meet-SD: Con L is never C3; id(a*) prime for atoms (n <= " + std::to_string(o.max_n) + ")"};
  Tally t;
  std::size_t sd = 0;
  for (const auto& l : upto(1, o.max_n)) {
    if (!is_meet_semidistributive(l)) continue;
    ++sd;
    ConLattice cl = con_lattice(l);
    t.check(!(cl.size() == 3 && poset_iso(cl.lattice.poset(), chain_poset(3))), "Con L = C3");
    for (int a : irreducibles(l).atoms) {
      auto s = pseudocomplement(l, a);
      if (!s) {
        t.check(false, "atom without pseudocomplement");
        continue;
      }
      Bits p(l.size());
      for (int x = 0; x < int(l.size()); ++x) p[x] = l.leq(x, *s);
      t.check(is_prime_ideal(l, p), "id(a*) not prime");
    }
  }
  return finish(r, t, std::to_string(sd) + " meet-semidistributive lattices");
}

}  // namespace

Row run_one(int id, const Options& o) {
  static const std::vector<std::function<Row(const Options&)>> fns{
      oracle_equivalence, funayama_nakayama, n5_reproduction, modular_boolean, product_congruences, chopped,
      boolean_triples_row, cubic, basic_rt_row, sps, semidistributive};
  auto start = std::chrono::steady_clock::now();
  Row r;
  try {
    r = fns.at(std::size_t(id - 1))(o);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Row> run_all(const Options& o) {
  std::vector<Row> out;
  for (int id = 1; id <= criteria_count; ++id) out.push_back(run_one(id, o));
  return out;
}

}  // namespace latw::suite
