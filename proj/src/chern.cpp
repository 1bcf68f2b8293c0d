#include "ulrichnorm/chern/chern.hpp"

#include "ulrichnorm/error.hpp"

namespace ulrichnorm::chern {

namespace {

using Q = Rational;

/// c3 of a construction, or unknown when it depends on an unknown input c3.
std::optional<GradedClass> maybe_c3(const ChernVector& e, const std::function<GradedClass()>& formula) {
  if (e.ring()->dimension() < 3) return GradedClass::zero(e.ring());
  if (!e.has_c3()) return std::nullopt;
  return formula();
}

}  // namespace

ChernVector tensor_square(const ChernVector& e) {
  const Q r(e.rank());
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  auto c3 = maybe_c3(e, [&] {
    return Q(2, 3) * (Q(2) * r.pow(3) - Q(3) * r * r - Q(2) * r + Q(3)) * c1.pow(3) +
           (Q(4) * r * r - Q(2) * r - Q(4)) * (c1 * c2) + Q(2) * r * e.c3();
  });
  return ChernVector(e.rank() * e.rank(), Q(2) * r * c1, (Q(2) * r * r - r - Q(1)) * (c1 * c1) + Q(2) * r * c2,
                     std::move(c3));
}

ChernVector sym2(const ChernVector& e) {
  const Q r(e.rank());
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  auto c3 = maybe_c3(e, [&] {
    return (r + Q(3)) * (r - Q(1)) * (r - Q(2)) / Q(6) * c1.pow(3) + (r * r + Q(2) * r - Q(4)) * (c1 * c2) +
           (r + Q(4)) * e.c3();
  });
  return ChernVector(e.rank() * (e.rank() + 1) / 2, (r + Q(1)) * c1,
                     (r + Q(2)) * (r - Q(1)) / Q(2) * (c1 * c1) + (r + Q(2)) * c2, std::move(c3));
}

ChernVector sym3(const ChernVector& e) {
  const Q r(e.rank());
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  const int rank = e.rank() * (e.rank() + 1) * (e.rank() + 2) / 6;
  std::optional<GradedClass> c3;
  if (e.ring()->dimension() < 3) c3 = GradedClass::zero(e.ring());
  return ChernVector(rank, (r + Q(2)) * (r + Q(1)) / Q(2) * c1,
                     Q(1, 8) * (r - Q(1)) * (r + Q(2)) * (r * r + Q(5) * r + Q(8)) * (c1 * c1) +
                         Q(1, 2) * (r + Q(2)) * (r + Q(3)) * c2,
                     std::move(c3));
}

ChernVector wedge2(const ChernVector& e) {
  const Q r(e.rank());
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  auto c3 = maybe_c3(e, [&] {
    return binomial(r - Q(1), 3) * c1.pow(3) + (r - Q(2)).pow(2) * (c1 * c2) + (r - Q(4)) * e.c3();
  });
  return ChernVector(e.rank() * (e.rank() - 1) / 2, (r - Q(1)) * c1,
                     binomial(r - Q(1), 2) * (c1 * c1) + (r - Q(2)) * c2, std::move(c3));
}

GradedClass sym_k_c1(const ChernVector& e, int k) {
  if (k < 1) throw InputError("sym_k_c1 needs k >= 1, got " + std::to_string(k));
  return binomial(Q(e.rank() + k - 1), k - 1) * e.c1();
}

ChernVector direct_sum(const ChernVector& e, const ChernVector& f) {
  require_same_ring(e.ring(), f.ring());
  const GradedClass c1 = e.c1() + f.c1();
  const GradedClass c2 = e.c2() + e.c1() * f.c1() + f.c2();
  std::optional<GradedClass> c3;
  if (e.ring()->dimension() < 3) {
    c3 = GradedClass::zero(e.ring());
  } else if (e.has_c3() && f.has_c3()) {
    c3 = e.c3() + e.c2() * f.c1() + e.c1() * f.c2() + f.c3();
  }
  return ChernVector(e.rank() + f.rank(), c1, c2, std::move(c3));
}

GradedClass chern_character(const ChernVector& e) {
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  GradedClass ch = GradedClass::scalar(e.ring(), Q(e.rank())) + c1 + Q(1, 2) * (c1 * c1 - Q(2) * c2);
  if (e.ring()->dimension() >= 3) ch += Q(1, 6) * (c1.pow(3) - Q(3) * (c1 * c2) + Q(3) * e.c3());
  return ch;
}

ChernVector dual(const ChernVector& e) {
  std::optional<GradedClass> c3;
  if (e.has_c3()) c3 = -e.c3();
  return ChernVector(e.rank(), -e.c1(), e.c2(), std::move(c3));
}

ChernVector twist(const ChernVector& e, const GradedClass& line_c1) {
  require_same_ring(e.ring(), line_c1.ring());
  if (!line_c1.is_homogeneous(1)) throw InputError("twist needs a divisor class, got " + line_c1.to_string());
  const Q r(e.rank());
  auto ck = [&](int k) {
    GradedClass sum = GradedClass::zero(e.ring());
    for (int i = 0; i <= k; ++i) {
      sum += binomial(r - Q(i), k - i) * (e.c(i) * line_c1.pow(static_cast<unsigned>(k - i)));
    }
    return sum;
  };
  std::optional<GradedClass> c3;
  if (e.ring()->dimension() < 3) {
    c3 = GradedClass::zero(e.ring());
  } else if (e.has_c3()) {
    c3 = ck(3);
  }
  return ChernVector(e.rank(), ck(1), ck(2), std::move(c3));
}

GradedClass segre_dual(const ChernVector& e, int up_to) {
  if (up_to < 0 || up_to > e.ring()->dimension()) {
    throw OutOfRange("Segre class index " + std::to_string(up_to) + " exceeds ring dimension " +
                     std::to_string(e.ring()->dimension()));
  }
  const ChernVector ed = dual(e);
  GradedClass c = GradedClass::one(e.ring()) + ed.c1() + ed.c2();
  if (up_to >= 3) c += ed.c3();
  return c.inverse().truncated(up_to);
}

const Ring& scalar_ring() {
  static const Ring ring = ClassRing::rank_one(3, Q(1));
  return ring;
}

ChernVector from_scalar(const ScalarChern& s) {
  const Ring& ring = scalar_ring();
  std::optional<GradedClass> c3;
  if (s.c3) c3 = GradedClass::hyperplane_power(ring, 3, *s.c3);
  return ChernVector(static_cast<int>(s.rank.to_int64()), GradedClass::hyperplane_power(ring, 1, s.c1),
                     GradedClass::hyperplane_power(ring, 2, s.c2), std::move(c3));
}

ScalarChern to_scalar(const ChernVector& e) {
  std::optional<Rational> c3;
  if (e.has_c3()) c3 = e.c3().entry(3);
  return ScalarChern{Q(e.rank()), e.c1().codim1()[0], e.c2().entry(2), std::move(c3)};
}

ClosedForm closed_form(Construction c) {
  switch (c) {
    case Construction::TensorSquare:
      return [](const ScalarChern& s, const Rational&) { return to_scalar(tensor_square(from_scalar(s))); };
    case Construction::Sym2:
      return [](const ScalarChern& s, const Rational&) { return to_scalar(sym2(from_scalar(s))); };
    case Construction::Sym3:
      return [](const ScalarChern& s, const Rational&) { return to_scalar(sym3(from_scalar(s))); };
    case Construction::Wedge2:
      return [](const ScalarChern& s, const Rational&) { return to_scalar(wedge2(from_scalar(s))); };
    case Construction::TensorLine:
      return [](const ScalarChern& s, const Rational& t) {
        return to_scalar(twist(from_scalar(s), GradedClass::hyperplane_power(scalar_ring(), 1, t)));
      };
  }
  throw InputError("unsupported construction");
}

Rational sym_k_c1_scalar(const ScalarChern& e, int k) {
  return sym_k_c1(from_scalar(e), k).codim1()[0];
}

}  // namespace ulrichnorm::chern
