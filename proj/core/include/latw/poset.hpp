#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latw {

using Bits = boost::dynamic_bitset<>;
using CoverPair = std::pair<int, int>;  // (lower, upper)

// Thrown for malformed order data: cycles, bad indices, axiom failures.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite ordered set on 0..n-1.  Immutable once built.
class Poset {
 public:
  Poset() = default;

  // Input may contain redundant (implied) pairs; they are reduced away.
  static Poset from_covers(std::size_t n, const std::vector<CoverPair>& pairs);
  // `leq` must already be a partial order; it is validated.
  static Poset from_relation(std::size_t n, const std::function<bool(int, int)>& leq);
  static Poset from_rows(std::vector<Bits> up);

  std::size_t size() const { return n_; }
  bool leq(int a, int b) const { return up_[a][b]; }
  bool lt(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return up_[a][b] || up_[b][a]; }
  bool parallel(int a, int b) const { return !comparable(a, b); }
  bool covers(int a, int b) const;  // a ≺ b

  const std::vector<int>& upper_covers(int a) const { return ucov_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lcov_[a]; }
  const Bits& up(int a) const { return up_[a]; }
  const Bits& down(int a) const { return down_[a]; }

  // Longest chain from a minimal element up to a, counted in edges.
  int height(int a) const { return height_[a]; }
  int length() const;

  std::vector<CoverPair> cover_pairs() const;
  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  std::vector<int> topological() const;  // by height, then index
  bool is_down_set(const Bits& s) const;
  bool is_up_set(const Bits& s) const;
  Bits down_closure(const Bits& s) const;

  // Subposet on `elems`; element i of the result is elems[i].
  Poset induced(const std::vector<int>& elems) const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  void finish();

  std::size_t n_ = 0;
  std::vector<Bits> up_, down_;
  std::vector<std::vector<int>> ucov_, lcov_;
  std::vector<int> height_;
};

Poset dual(const Poset& p);
Poset chain_poset(std::size_t n);
Poset antichain_poset(std::size_t n);

// Canonical labelling: order[i] is the element placed at canonical position i.
// Two posets are isomorphic iff their codes are equal.
struct CanonicalForm {
  std::vector<int> order;
  std::vector<int> code;
};
CanonicalForm canonical_form(const Poset& p);

// map[i] is the image in q of element i of p.
std::optional<std::vector<int>> are_isomorphic(const Poset& p, const Poset& q);
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<int>& map);

// Every poset on n <= 7 points up to isomorphism, canonically labelled.
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace latw
