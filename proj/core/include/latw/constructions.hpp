#pragma once

#include <utility>
#include <vector>

#include "latw/congruence.hpp"

namespace latw {

// Direct product of finitely many lattices.  Elements are mixed-radix
// numbers: the last factor varies fastest.
struct Product {
  Lattice lattice;
  std::vector<std::size_t> sizes;

  int at(const std::vector<int>& coords) const;
  std::vector<int> coords(int x) const;
  int project(int x, std::size_t factor) const { return coords(x)[factor]; }
};
Product direct_product(const std::vector<Lattice>& factors);
Product direct_product(const Lattice& l, const Lattice& k);

// α_1 × ... × α_n, and back.  `split` throws OrderError if γ is not a product
// of factor congruences (a congruence of a product always is).
Congruence product_congruence(const Product& p, const std::vector<Congruence>& factors);
std::vector<Congruence> split_congruence(const Product& p, const Congruence& g);

// P + Q puts Q on top of P; P +̇ Q additionally identifies 1_P with 0_Q.
Poset ordinal_sum(const Poset& p, const Poset& q);
Poset glued_sum(const Poset& p, const Poset& q);  // throws unless 1_P and 0_Q exist
Lattice ordinal_sum(const Lattice& p, const Lattice& q);
Lattice glued_sum(const Lattice& p, const Lattice& q);

// Gluing of K and L over a filter F of K and an ideal I of L.  `filter`
// lists F; phi[i] is the image in L of filter[i].  G keeps K's indices and
// appends the elements of L outside I.
struct Gluing {
  Lattice lattice;
  std::vector<int> from_k, from_l;  // element of K / L -> element of G
};
Gluing glue(const Lattice& k, const Lattice& l, const std::vector<int>& filter, const std::vector<int>& phi);

// α = α_K ∘ʳ α_L, computed literally as the reflexive product.
Congruence glue_congruence(const Gluing& g, const Lattice& k, const Lattice& l, const Congruence& ak,
                           const Congruence& al);
std::pair<Congruence, Congruence> split_glued_congruence(const Gluing& g, const Congruence& a);

}  // namespace latw
