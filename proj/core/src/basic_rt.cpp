#include "latw/basic_rt.hpp"

#include "latw/named.hpp"

namespace latw {

BasicRT basic_rt(const Poset& p) {
  BasicRT rt;
  const int n = int(p.size());
  if (n == 0) {
    rt.chopped = ChoppedLattice::from_poset(chain_poset(1));
    rt.lattice = named::chain(1);
    return rt;
  }
  // global ids: 0 is zero, 1 + x is the atom of x, private elements follow
  std::vector<Lattice> pieces;
  std::vector<std::vector<int>> ids;
  std::vector<std::string> names = {"0"};
  for (int x = 0; x < n; ++x) names.push_back("p" + std::to_string(x));
  int next = n + 1;
  auto fresh = [&](const std::string& name) {
    names.push_back(name);
    return next++;
  };
  const Lattice n6 = named::n6();
  for (auto [lo, hi] : p.cover_pairs()) {
    // N6 order: 0, p, q1, q2, q, 1
    std::string tag = std::to_string(hi) + "/" + std::to_string(lo);
    pieces.push_back(n6);
    ids.push_back({0, 1 + hi, 1 + lo, fresh("q2:" + tag), fresh("q:" + tag), fresh("1:" + tag)});
  }
  for (int x = 0; x < n; ++x)
    if (p.upper_covers(x).empty() && p.lower_covers(x).empty()) {
      pieces.push_back(named::chain(2));
      ids.push_back({0, 1 + x});
    }
  Merge m = merge(pieces, ids);
  m.chopped.set_names(names);
  IdealLattice id = ideal_lattice(m.chopped);

  CanonicalForm cf = canonical_form(id.lattice.poset());
  const std::size_t size = id.lattice.size();
  std::vector<int> pos(size);
  for (std::size_t i = 0; i < size; ++i) pos[cf.order[i]] = int(i);
  rt.lattice = Lattice::from_poset(Poset::from_relation(
      size, [&](int a, int b) { return id.lattice.leq(cf.order[a], cf.order[b]); }));
  std::vector<std::string> relabelled;
  for (std::size_t i = 0; i < size; ++i) relabelled.push_back(id.lattice.name(cf.order[i]));
  rt.lattice.set_names(std::move(relabelled));
  for (int x = 0; x < n; ++x) rt.atom_of.push_back(pos[id.embed[1 + x]]);
  rt.chopped = std::move(m.chopped);
  return rt;
}

BasicRTCheck verify_basic_rt(const Poset& p, const BasicRT& rt) {
  BasicRTCheck c;
  const Lattice& l = rt.lattice;
  c.sectionally_complemented = is_sectionally_complemented(l);
  ConLattice cl = con_lattice(l);
  c.ji_isomorphic = are_isomorphic(cl.ji_poset, p).has_value();
  // image of each atom among the join-irreducible congruences
  std::vector<int> map;
  for (int x : rt.atom_of) {
    int idx = cl.index_of(principal(l, l.zero(), x));
    auto it = std::find(cl.ji.begin(), cl.ji.end(), idx);
    if (it == cl.ji.end()) return c;
    map.push_back(int(it - cl.ji.begin()));
  }
  c.atom_map = map.size() == cl.ji.size() && is_order_isomorphism(p, cl.ji_poset, map);
  return c;
}

}  // namespace latw
