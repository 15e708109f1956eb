#pragma once

#include "seifert/arith.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace seifert {

// Ordered fiber multiplicities (a_1, ..., a_n). Entries are pairwise
// coprime and every entry is >= 2 except the last slot, which may be 1
// (a regular fiber). An empty tuple and a single entry both describe S^3.
class Multiplicities {
 public:
  Multiplicities() = default;
  explicit Multiplicities(std::vector<Int> entries);

  // Entries sorted ascending, with a single 1 (if present) moved to the
  // last slot.
  static Multiplicities sorted(std::vector<Int> entries);

  // Reorders so the fiber of the given order sits in the last slot and
  // returns the tuple together with the 1-based index of that slot.
  // order = 1 selects a regular fiber, appending a slot of order 1 when
  // absent; selecting a singular fiber drops any order-1 slot (the
  // manifold is unchanged). Throws if no fiber has the given order.
  static std::pair<Multiplicities, int> with_fiber_order(
      std::vector<Int> entries, const Int& order);

  const std::vector<Int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Int& last() const;
  Int product() const;         // a_1 ... a_n
  Int alpha() const;           // a_1 ... a_{n-1}
  int singular_count() const;  // entries >= 2
  // A homology sphere with fewer than three singular fibers is S^3.
  bool represents_s3() const { return singular_count() < 3; }

 private:
  std::vector<Int> entries_;
};

// Seifert invariants e, (a_1, b_1), ..., (a_n, b_n) in the convention
// 1 <= b_j < a_j when a_j > 1 and b_j = 0 when a_j = 1.
struct SeifertInvariants {
  Int e;
  std::vector<std::pair<Int, Int>> pairs;

  std::size_t n() const { return pairs.size(); }
  Int product() const;  // a_1 ... a_n
  Int alpha() const;    // a_1 ... a_{n-1}
  const Int& last_a() const;
  const Int& last_b() const;
  // a_1...a_n (sum_j b_j/a_j - e); always an integer, and -1 for the
  // orientation convention used throughout.
  Int eq1_value() const;

  bool operator==(const SeifertInvariants&) const = default;
};

// A Seifert homology sphere with a recorded orientation. inv always
// carries the standard (eq1 = -1) data; sign = -1 means the manifold is
// the orientation reversal of the one inv describes.
struct OrientedSeifert {
  int sign = +1;
  SeifertInvariants inv;

  bool operator==(const OrientedSeifert&) const = default;
};

// The unique invariants with eq1 = -1: each b_j solves
// (P/a_j) b_j = -1 (mod a_j) in [1, a_j) where P = a_1...a_n, b_j = 0
// when a_j = 1, and e = sum b_j/a_j + 1/P is a positive integer.
SeifertInvariants from_multiplicities(const Multiplicities& m);

// Whether eq1_value() equals rhs (+1 or -1).
bool verify_eq1(const SeifertInvariants& inv, int rhs);

// (e, (a_j, b_j)) -> (n2 - e, (a_j, a_j - b_j)) where n2 counts a_j >= 2;
// order-1 slots are kept as (1, 0). Negates eq1_value; an involution.
SeifertInvariants reverse_orientation(const SeifertInvariants& inv);

// Normalizes arbitrary pairs with gcd(a_j, b_j) = 1 into the convention
// via (a, b) -> (a, b - a), e -> e - 1; preserves eq1_value. Idempotent.
SeifertInvariants canonicalize(const Int& e,
                               std::vector<std::pair<Int, Int>> pairs);

// Pads with (1, 0) slots until at least n slots are present.
SeifertInvariants pad_slots(SeifertInvariants inv, std::size_t n);

}  // namespace seifert
