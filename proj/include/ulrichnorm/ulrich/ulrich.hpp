#pragma once

#include "ulrichnorm/chern/chern_vector.hpp"
#include "ulrichnorm/rr/variety.hpp"

namespace ulrichnorm::ulrich {

/// A rank-r Ulrich bundle, numerically: h0 = r * H^n.
struct UlrichData {
  VarietyModel variety;
  int rank;
  ChernVector chern;
  Rational h0;
};

/// Hypersurfaces only: Chern data from the vanishing solver.
UlrichData make_ulrich(const VarietyModel& v, int rank);

/// Caller-supplied Chern data, validated against the Ulrich numerics:
/// c1.H^{n-1} = (r/2)(K + (n+1)H).H^{n-1}; on surfaces c2 must satisfy the
/// Casnati formula; on hypersurfaces the data must equal the solver output.
UlrichData make_ulrich(const VarietyModel& v, int rank, ChernVector chern);

/// c2 = (c1^2 - c1.K)/2 + r chi(O_S) - r d.
Rational casnati_c2(int rank, const Rational& degree, const Rational& chi, const Rational& c1sq,
                    const Rational& c1k);

/// h0 (= chi) of E(x)E, S^2E and S^3E on a surface.
struct PowerCounts {
  Rational tensor2;
  Rational sym2;
  Rational sym3;
  friend bool operator==(const PowerCounts&, const PowerCounts&) = default;
};

/// Closed forms in terms of c1^2, c1.K, d and chi(O_S).
PowerCounts h0_powers_from_invariants(int rank, const Rational& degree, const Rational& chi, const Rational& c1sq,
                                      const Rational& c1k);

/// Specialization to c1 = (r/2)(K + 3H), in terms of K^2, K.H, d, chi(O_S).
PowerCounts h0_powers_canonical(int rank, const Rational& degree, const Rational& chi, const Rational& k2,
                                const Rational& kh);

/// Section counts of the powers of an Ulrich bundle on a surface. Throws
/// InconsistentData when c2 violates the Casnati formula, when the two closed
/// forms disagree, or when a count is not a nonnegative integer.
PowerCounts h0_powers_surface(const UlrichData& u);

/// Same counts via Riemann-Roch applied to the Chern classes of the powers.
PowerCounts h0_powers_via_hrr(const UlrichData& u);

/// Degree-d surface in P^3 with c1 = (r(d-1)/2)H. Requires d >= 2 and parity.
PowerCounts h0_powers_p3_hypersurface(int degree, int rank);

/// Euler characteristics and top Chern classes (as degrees) of E(x)E, S^2E.
struct P4Counts {
  Rational chi_tensor2;
  Rational chi_sym2;
  Rational c3_tensor2;
  Rational c3_sym2;
  friend bool operator==(const P4Counts&, const P4Counts&) = default;
};

/// Degree-d threefold in P^4. Requires d >= 1 and parity.
P4Counts chi_powers_p4_hypersurface(int degree, int rank);

/// Same values via Riemann-Roch on the solved Chern data.
P4Counts chi_powers_via_hrr(const UlrichData& u);

/// c3(E) of a rank-r Ulrich bundle on a degree-d threefold in P^4, as a degree.
Rational threefold_c3(int degree, int rank);

}  // namespace ulrichnorm::ulrich
