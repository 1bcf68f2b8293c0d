#pragma once

#include "ulrichnorm/chern/chern_vector.hpp"
#include "ulrichnorm/normality/verdict.hpp"
#include "ulrichnorm/rr/variety.hpp"

namespace ulrichnorm::normality {

/// Syzygy bundle M_E = ker(H0(E) (x) O -> E) for h = h0(E): rank h - r,
/// c(M_E) = c(E)^{-1}, so c1 = -c1(E), c2 = c1(E)^2 - c2(E).
ChernVector syzygy_chern(const ChernVector& e, int h);

/// Numerical data of the degeneracy loci Z in C of general sections of
/// Lambda^2 M_E^*.
struct DegeneracyData {
  /// C(h-r, 2) - 1.
  Rational lambda;
  /// [Z] = (h-r-2)((h-r+1)c1^2 - 2c2)/2.
  Rational z_degree;
  /// C lies in |m det E| with m = h - r - 1.
  int c_multiple = 0;
  Rational c_squared;
  Rational c_dot_k;
  /// 1 + (C^2 + C.K)/2.
  Rational genus_c;
  /// h0(C, Z) >= lambda + 1.
  Rational h0_z_lower;
  Rational lhs;
  Rational rhs;
  /// (lhs - rhs)/2.
  Rational h1_lower;
  /// h0 bound - deg Z + g(C) - 1, by Riemann-Roch on C.
  Rational h1_lower_rr;
};

struct AcmResult {
  NormalityVerdict verdict;
  DegeneracyData data;
};

/// Evaluates (h-r-1)c1.K + 2(h-r-2)c2 + h(h-1) > (h-r-3)c1^2 + r(2h-r-1).
/// Throws InputError unless r >= 2 and h >= r + 3.
AcmResult surface_acm_criterion(int h, int r, const Rational& c1sq, const Rational& c1k, const Rational& c2);

/// Same with invariants read off a surface model; notes when q or p_g is
/// nonzero.
AcmResult surface_acm_criterion(const VarietyModel& v, const ChernVector& e, int h);

struct SectionalResult {
  NormalityVerdict verdict;
  /// s_n(E^*) = deg P(E).
  Rational degree;
  /// (K + c1).s_{n-1}(E^*).
  Rational adjoint_degree;
  Rational genus;
  /// deg >= 2g + 1.
  bool degree_form = false;
  /// (3-n)s_n >= 3 + (K + c1).s_{n-1}.
  bool segre_form = false;
};

/// Sectional-curve criterion for aCM-ness of P(E), n = dim X in {1, 2, 3}.
SectionalResult sectional_curve_criterion(const VarietyModel& v, const ChernVector& e);

}  // namespace ulrichnorm::normality
