#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latw/congruence.hpp"

namespace latw {

using Triple = std::array<int, 3>;

// (F): x = (x∨y)∧(x∨z) and its two rotations.
bool is_boolean_triple(const Lattice& l, const Triple& t);
// (B): x∧y = y∧z = z∧x.
bool is_balanced(const Lattice& l, const Triple& t);
// Smallest Boolean triple above t, in one step.
Triple triple_closure(const Lattice& l, const Triple& t);
Triple triple_join(const Lattice& l, const Triple& s, const Triple& t);
Triple triple_meet(const Lattice& l, const Triple& s, const Triple& t);

struct Triples {
  Lattice lattice;
  std::vector<Triple> triples;  // element -> triple, ascending
  std::vector<int> gamma;       // x in L -> its image
  int index_of(const Triple& t) const;  // -1 if absent
};

// M₃[L], all Boolean triples ordered componentwise; gamma: x ↦ (x,0,0).
Triples boolean_triples(const Lattice& l);

// M₃[L,a,b] = [(0,a,0),(1,b,b)]; b defaults to 1, giving M₃[L,a].
// gamma: x ↦ (x,a,x∧a).
struct TripleInterval : Triples {
  int a = 0, b = 0;
  // element v -> {v_B, v_I, v_J}; v_I is v_K when b = 1
  std::vector<std::array<int, 3>> parts;
  // the package: bounds, u = (1,a,a) and its complement v = (0,b,0)
  int zero = 0, one = 0, u = 0, v = 0;
  std::vector<int> ideal_i;   // I_{a,b} = [zero, v], ascending
  std::vector<int> filter_f;  // F_{a,b} = [v, one], ascending
  std::vector<int> i_of;      // x in [a,b] -> (0,x,0); -1 elsewhere
  std::vector<int> f_of;      // x in L -> (x,b,x∧b)
};
TripleInterval boolean_triples_interval(const Lattice& l, int a, std::optional<int> b = std::nullopt);

// α³ restricted to the triples.
Congruence triple_congruence(const Lattice& l, const Triples& t, const Congruence& a);

// Carry α to F_{a,b}, extend to the whole interval lattice, and compare the
// two copies of [a,b]: x_F ≡ y_F iff x_I ≡ y_I.
bool synchronized(const Lattice& l, const TripleInterval& t, const Congruence& a);

}  // namespace latw
