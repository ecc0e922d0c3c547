#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latw::suite {

struct Options {
  std::size_t max_n = 7;     // exhaustive enumeration bound (≤ 8)
  std::size_t oracle_n = 6;  // bound for the brute-force partition oracle
  std::size_t poset_n = 5;   // Basic RT: every poset up to this size
  std::uint64_t seed = 1;    // first seed of the generated SR lattices
};

struct Row {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // counts, or the first failure
  double seconds = 0;
};

// The acceptance battery, one row per criterion, in order.
std::vector<Row> run_all(const Options& o);
Row run_one(int id, const Options& o);
constexpr int criteria_count = 11;

}  // namespace latw::suite
