#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulrichnorm/chern/chern_vector.hpp"
#include "ulrichnorm/normality/verdict.hpp"
#include "ulrichnorm/ulrich/ulrich.hpp"

namespace ulrichnorm::normality {

/// Surjectivity of S^k H^0(E) -> H^0(S^k E) forces C(h0+k-1, k) >= h0(S^k E);
/// the strong variant compares h0^k with h0(E^{(x)k}). `lower` is a lower
/// bound for the target h0. Throws InputError if k < 2 or h0 is not a
/// nonnegative integer.
NormalityVerdict dimension_test(const Rational& h0, int k, const Rational& lower, bool strong);

/// Ulrich bundles on a smooth surface of degree d in P^3 with c1 = (r(d-1)/2)H.
struct P3Classification {
  int degree = 0;
  int rank = 0;
  /// Empty when the vanishing system admits no bundle of this rank.
  std::optional<ChernVector> chern;
  ulrich::PowerCounts h0;
  NormalityVerdict two_normal;
  NormalityVerdict strongly_two_normal;
  NormalityVerdict three_normal;
  /// dim S^3 H^0(E) - h0(S^3 E).
  Rational slack3;
  /// (d, r) lies in {d = 2} u {d = 3, r >= 3} u {d = 4, r >= 6}.
  bool allowed = false;
  std::vector<std::string> notes;
};

/// Requires d >= 2 and r(d-1) even.
P3Classification classify_p3_hypersurface(int degree, int rank);

/// rd(d-1)(r-2)(d(7r+2) + r + 8)/72.
Rational p3_three_normality_slack(int degree, int rank);

/// Ulrich bundles on a smooth threefold of degree d in P^4. Euler
/// characteristics are used as lower bounds for h0.
struct P4Classification {
  int degree = 0;
  int rank = 0;
  std::optional<ChernVector> chern;
  ulrich::P4Counts counts;
  NormalityVerdict strongly_two_normal;
  NormalityVerdict two_normal;
  /// d >= 4.
  bool within_hypotheses = false;
  /// 3r > d + 4.
  bool above_threshold = false;
  std::vector<std::string> notes;
};

/// Requires d >= 1 and r(d-1) even.
P4Classification classify_p4_hypersurface(int degree, int rank);

/// Ulrich bundles on a (2, a) complete intersection surface in P^4 with
/// Pic = ZH, d = 2a, c1 = (rd/4)H.
struct CiRow {
  int rank = 0;
  int degree = 0;
  Rational h0_sym2;
  Rational dim_sym2;
  /// r d^2 - (30r - 18)d + 44r - 12; 2-normality needs this <= 0.
  Rational quadratic;
  bool feasible = false;
};

struct CiThreshold {
  int degree = 0;
  /// Least rank >= 2 from which 2-normality is numerically possible.
  std::optional<int> min_rank;
};

struct CiScan {
  int r_max = 0;
  int d_max = 0;
  std::vector<CiRow> rows;
  std::vector<CiThreshold> thresholds;
  /// Feasibility ranges, one line per group of degrees with equal threshold.
  std::vector<std::string> bullets;
  std::optional<int> max_feasible_degree;
  /// Least degree from which no rank is ever feasible.
  int never_feasible_from = 0;
};

/// (rd/96)(rd^2 + 18(r+1)d + 44r + 36).
Rational ci_h0_sym2(int rank, int degree);
Rational ci_quadratic(int rank, int degree);

/// Ranks 2..r_max, even degrees 6..d_max. Throws InputError if r_max < 2 or
/// d_max < 6.
CiScan ci_example_scan(int r_max, int d_max = 60);

}  // namespace ulrichnorm::normality
