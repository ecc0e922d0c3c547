#pragma once

#include <string>
#include <vector>

#include "latw/lattice.hpp"

// Small named lattices used throughout the tests and the shipped corpus.
namespace latw::named {

Lattice chain(std::size_t n);    // C_n
Lattice boolean(std::size_t k);  // B_k, 2^k elements
Lattice m3();                    // o, a, b, c, i
Lattice n5();                    // o < a < b < i, o < c < i
Lattice n6();                    // N(p,q): 0, p, q1, q2, q, 1
Lattice s7();                    // 0, x, y, a, m, b, 1 (B2 with a fork)
Lattice s8();
Lattice n55();
Lattice grid(std::size_t m, std::size_t n);  // C_m x C_n, element (i,j) at i*n + j
// Part A for |A| = k, ordered by refinement; elements named by block strings like "01|2".
Lattice partition_lattice(std::size_t k);

Lattice by_name(const std::string& name);  // "C4", "B3", "M3", "N5", "grid3x4", ...
std::vector<std::string> corpus_names();

}  // namespace latw::named
