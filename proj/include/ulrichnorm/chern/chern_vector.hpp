#pragma once

#include <optional>
#include <string>

#include "ulrichnorm/exactalg/graded_class.hpp"

namespace ulrichnorm {

/// Rank and Chern classes c1..c3 of a (possibly virtual-free) bundle.
///
/// Components beyond the ring dimension are zero, and c_i = 0 for i > rank.
/// c3 may be unknown on threefolds when a construction does not provide it.
class ChernVector {
 public:
  /// Throws InputError on negative rank, non-homogeneous classes, or nonzero
  /// classes above the rank; RingMismatch when the classes disagree on a ring.
  ChernVector(int rank, GradedClass c1, GradedClass c2, std::optional<GradedClass> c3);
  ChernVector(int rank, GradedClass c1, GradedClass c2);

  static ChernVector trivial(const Ring& ring, int rank);
  static ChernVector line(const GradedClass& c1);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Ring& ring() const { return c1_.ring(); }
  [[nodiscard]] const GradedClass& c1() const { return c1_; }
  [[nodiscard]] const GradedClass& c2() const { return c2_; }
  [[nodiscard]] bool has_c3() const { return c3_.has_value(); }
  /// Throws InconsistentData when c3 is unknown.
  [[nodiscard]] const GradedClass& c3() const;
  /// c_k for 0 <= k <= 3.
  [[nodiscard]] GradedClass c(int k) const;

  /// 1 + c1 + c2 + c3.
  [[nodiscard]] GradedClass total() const;

  friend bool operator==(const ChernVector& a, const ChernVector& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  int rank_;
  GradedClass c1_;
  GradedClass c2_;
  std::optional<GradedClass> c3_;
};

}  // namespace ulrichnorm
