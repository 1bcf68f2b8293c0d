#pragma once

#include <optional>
#include <vector>

#include "ulrichnorm/normality/verdict.hpp"

namespace ulrichnorm::normality {

/// A B-Ulrich bundle of rank r on a smooth curve of genus g, deg B = d.
struct CurveCase {
  int g = 0;
  int d = 1;
  int r = 1;
  /// B is very ample (the curve is embedded by B).
  bool very_ample = false;
  bool general_curve = false;
  /// B is a general polarization of its degree.
  bool general_polarization = false;
  /// Clifford index of the curve: min of deg A - 2(h0(A) - 1) over line
  /// bundles A with h0(A), h1(A) >= 2.
  std::optional<int> cliff;
  /// Orders p >= 2 for which (N_p) is tested.
  std::vector<int> syzygy_orders;
};

/// Sufficient conditions for projective normality and (N_p). Every positive
/// verdict is monotone in d. Throws InputError on invalid cases.
std::vector<NormalityVerdict> curve_thresholds(const CurveCase& c);

/// C(d+1, 2) >= 2d + g - 1: the quadric count that decides 2-normality of a
/// general Ulrich line bundle when multiplication maps have maximal rank.
/// Throws InputError if g < 3.
NormalityVerdict mrc_check(int g, int d);

/// Verdicts for degrees d = g, g+1 (all Ulrich line bundles) and
/// d = g - h + 1 with g >= g_h (general Ulrich bundles). Requires an embedded
/// curve of genus >= 3; returns an empty list when nothing applies.
std::vector<NormalityVerdict> kko_verdicts(const CurveCase& c);

/// g_h for h = 2..5; throws OutOfRange otherwise.
int kko_genus_threshold(int h);

struct KkoTuple {
  int h;
  int j;
  int a;
  int b;
  friend bool operator==(const KkoTuple&, const KkoTuple&) = default;
};

/// Exceptional (j, a, b) shapes of non-normally-generated line bundles
/// K - cA + D of degree 2g - h, A in W^j_a, D in W_b.
const std::vector<KkoTuple>& kko_tuples();

struct KkoRow {
  KkoTuple tuple;
  int g_h = 0;
  /// Multiplicity c with c a = b + h - 2.
  int c = 0;
  /// dim W^j_a + dim W_b <= a - 2j - 1 + b.
  int dimension_bound = 0;
  bool bound_ok = false;
  /// 1 <= c <= 5, a >= 2j, 3 <= a <= 9, 2 <= b <= 12.
  bool shape_ok = false;
};

std::vector<KkoRow> kko_audit();

}  // namespace ulrichnorm::normality
