#pragma once

#include "ulrichnorm/chern/chern_vector.hpp"
#include "ulrichnorm/rr/variety.hpp"

namespace ulrichnorm::rr {

/// deg c1(E) + r(1 - g). Throws RingMismatch unless E lives on a curve ring.
Rational chi_curve(int genus, const ChernVector& e);

/// r chi(O_S) + (c1^2 - c1.K)/2 - c2.
Rational chi_surface(const VarietyModel& v, const ChernVector& e);

/// Integral of ch(E) td(X) for a smooth degree-d threefold in P^4.
Rational chi_threefold_hypersurface(int degree, const ChernVector& e);

/// Dispatches on the variety kind.
Rational chi(const VarietyModel& v, const ChernVector& e);

/// td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24, truncated.
GradedClass todd_class(const ChernVector& tangent);

/// Throws ParityError unless r(d - 1) is even.
void require_parity(int degree, int rank);

/// The Ulrich first Chern class (r/2)(K + (n+1)H). On hypersurfaces this is
/// (r(d-1)/2)H and the parity constraint is enforced.
GradedClass ulrich_c1(const VarietyModel& v, int rank);

/// Recovers the Chern classes of a rank-r Ulrich bundle on a hypersurface in
/// P^3 or P^4 from chi(E(-p)) = 0, p = 1..n, with c1 fixed.
///
/// Throws ParityError on parity violation, SingularSystem if the vanishing
/// system does not determine the classes, and InconsistentData if the solution
/// contradicts rank vanishing (e.g. r = 1 on a hypersurface of degree >= 2).
ChernVector solve_ulrich_chern(const VarietyModel& v, int rank);

}  // namespace ulrichnorm::rr
