#pragma once

#include "ulrichnorm/chern/chern_vector.hpp"
#include "ulrichnorm/exactalg/splitting_oracle.hpp"

namespace ulrichnorm::chern {

/// E (x) E: rank r^2.
ChernVector tensor_square(const ChernVector& e);

/// S^2 E: rank r(r+1)/2.
ChernVector sym2(const ChernVector& e);

/// S^3 E: rank r(r+1)(r+2)/6. Only c1, c2 are known; c3 is left unknown on
/// threefolds.
ChernVector sym3(const ChernVector& e);

/// Lambda^2 E: rank r(r-1)/2 (the zero bundle when r = 1).
ChernVector wedge2(const ChernVector& e);

/// c1(S^k E) = C(r+k-1, k-1) c1(E). Throws InputError if k < 1.
GradedClass sym_k_c1(const ChernVector& e, int k);

/// Whitney sum: c(E + F) = c(E) c(F).
ChernVector direct_sum(const ChernVector& e, const ChernVector& f);

/// ch(E) = r + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2 + 3c3)/6, truncated at the
/// ring dimension.
GradedClass chern_character(const ChernVector& e);

ChernVector dual(const ChernVector& e);

/// E (x) L for a line bundle with first Chern class `line_c1`.
ChernVector twist(const ChernVector& e, const GradedClass& line_c1);

/// Segre classes of E*: the inverse of c(E*), truncated at codimension up_to.
/// Throws OutOfRange when up_to exceeds the ring dimension.
GradedClass segre_dual(const ChernVector& e, int up_to);

/// Closed form for `c`, evaluated by embedding the scalar data into Q[H]/(H^4)
/// with H^3 = 1. Used to feed the splitting oracle with this module's formulas.
ClosedForm closed_form(Construction c);

/// c1(S^k E) closed form in scalar form.
Rational sym_k_c1_scalar(const ScalarChern& e, int k);

/// Ring used to embed scalar Chern data: rank one, dimension 3, H^3 = 1.
const Ring& scalar_ring();
ChernVector from_scalar(const ScalarChern& s);
ScalarChern to_scalar(const ChernVector& e);

}  // namespace ulrichnorm::chern
