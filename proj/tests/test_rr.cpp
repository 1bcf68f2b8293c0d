#include <doctest.h>

#include "ulrichnorm/chern/chern.hpp"
#include "ulrichnorm/error.hpp"
#include "ulrichnorm/rr/riemann_roch.hpp"

using namespace ulrichnorm;

namespace {

Rational casnati(int d, int r) {
  // Casnati c2 (as a degree) for c1 = (r(d-1)/2)H on a degree-d surface in P^3.
  return Rational(d * r * (d - 1) * (3 * d * r - 2 * d - 3 * r + 4), 24);
}

}  // namespace

TEST_CASE("variety models derive their invariants") {
  const VarietyModel k3 = VarietyModel::hypersurface_p3(4);
  CHECK(k3.chi_structure_sheaf() == Rational(2));
  CHECK(k3.canonical().is_zero());
  CHECK(k3.geometric_genus() == 1);
  CHECK(VarietyModel::hypersurface_p3(5).chi_structure_sheaf() == Rational(5));

  const VarietyModel quintic = VarietyModel::hypersurface_p4(5);
  const ChernVector t = quintic.tangent();
  const Ring& ring = quintic.ring();
  CHECK(t.c1().is_zero());
  CHECK(t.c2() == GradedClass::hyperplane_power(ring, 2, Rational(10)));
  CHECK(t.c3() == GradedClass::hyperplane_power(ring, 3, Rational(-40)));
  CHECK(integrate(t.c3()) == Rational(-200));
  CHECK(VarietyModel::hypersurface_p4(1).chi_structure_sheaf() == Rational(1));
  CHECK(quintic.chi_structure_sheaf() == Rational(0));

  for (int d = 1; d <= 8; ++d) {
    const ChernVector td = VarietyModel::hypersurface_p4(d).tangent();
    const Ring& rg = td.ring();
    CHECK(td.c1() == GradedClass::hyperplane_power(rg, 1, Rational(5 - d)));
    CHECK(td.c2() == GradedClass::hyperplane_power(rg, 2, Rational(d * d - 5 * d + 10)));
    CHECK(td.c3() == GradedClass::hyperplane_power(rg, 3, Rational(-d * d * d + 5 * d * d - 10 * d + 10)));
  }

  const VarietyModel ci = VarietyModel::complete_intersection_2a(3);
  CHECK(ci.degree() == Rational(6));
  CHECK(ci.chi_structure_sheaf() == Rational(2));
  CHECK(intersect(ci.canonical(), ci.hyperplane()) == Rational(0));

  CHECK_THROWS_AS(VarietyModel::curve(-1, 3), InputError);
  CHECK_THROWS_AS(VarietyModel::hypersurface_p3(0), InputError);
  CHECK_THROWS_AS(VarietyModel::surface(ClassRing::surface_hk(4, 0, 0), Rational(3), 0, 1), InputError);
  CHECK_THROWS_AS((void)VarietyModel::curve(2, 5).tangent(), InputError);
}

TEST_CASE("chi on curves") {
  const Ring ring = ClassRing::rank_one(1, Rational(5));
  CHECK(rr::chi_curve(0, ChernVector::trivial(ring, 1)) == Rational(1));
  for (int g = 0; g <= 6; ++g) {
    const VarietyModel c = VarietyModel::curve(g, 5);
    for (int r = 1; r <= 3; ++r) {
      const ChernVector e(r, rr::ulrich_c1(c, r), GradedClass::zero(c.ring()));
      CHECK(integrate(e.c1()) == Rational(r * (5 + g - 1)));
      CHECK(rr::chi(c, e) == Rational(r * 5));
      CHECK(rr::chi_curve(g, e) == Rational(r * 5));
    }
  }
  CHECK_THROWS_AS(rr::chi_curve(0, ChernVector::trivial(ClassRing::rank_one(2, 1), 1)), RingMismatch);
}

TEST_CASE("chi on surfaces") {
  const VarietyModel k3 = VarietyModel::hypersurface_p3(4);
  const Ring& ring = k3.ring();
  CHECK(rr::chi_surface(k3, ChernVector::trivial(ring, 1)) == Rational(2));
  const ChernVector e(2, GradedClass::hyperplane_power(ring, 1, Rational(3)), GradedClass::top(ring, 2, Rational(14, 4)));
  CHECK(integrate(e.c2()) == Rational(14));
  const ChernVector e1 = chern::twist(e, GradedClass::hyperplane_power(ring, 1, Rational(-1)));
  CHECK(rr::chi_surface(k3, e1) == Rational(0));
  CHECK(rr::chi_surface(k3, e) == Rational(8));

  const VarietyModel lattice = VarietyModel::surface(ClassRing::surface_hk(4, 0, 0), Rational(2), 0);
  CHECK(rr::chi_surface(lattice, ChernVector::trivial(lattice.ring(), 3)) == Rational(6));
  CHECK_THROWS_AS(rr::chi_surface(lattice, e), RingMismatch);
  CHECK_THROWS_AS(rr::chi_surface(VarietyModel::hypersurface_p4(3), e), InputError);
}

TEST_CASE("chi on threefold hypersurfaces") {
  CHECK(rr::chi_threefold_hypersurface(1, ChernVector::trivial(ClassRing::rank_one(3, 1), 1)) == Rational(1));
  // O(k) on P^3 has chi = C(k+3, 3).
  const Ring p3 = ClassRing::rank_one(3, 1);
  for (int k = -3; k <= 4; ++k) {
    const ChernVector l = ChernVector::line(GradedClass::hyperplane_power(p3, 1, Rational(k)));
    CHECK(rr::chi_threefold_hypersurface(1, l) == binomial(Rational(k + 3), 3));
  }
  CHECK_THROWS_AS(rr::chi_threefold_hypersurface(2, ChernVector::trivial(p3, 1)), RingMismatch);
}

TEST_CASE("Ulrich solver on surfaces in P^3") {
  const ChernVector e = rr::solve_ulrich_chern(VarietyModel::hypersurface_p3(4), 2);
  CHECK(integrate(e.c1() * e.c1()) == Rational(36));
  CHECK(integrate(e.c2()) == Rational(14));

  for (int d = 2; d <= 10; ++d) {
    const VarietyModel v = VarietyModel::hypersurface_p3(d);
    for (int r = 2; r <= 6; ++r) {
      if (r * (d - 1) % 2) {
        CHECK_THROWS_AS(rr::solve_ulrich_chern(v, r), ParityError);
        continue;
      }
      const ChernVector s = rr::solve_ulrich_chern(v, r);
      CHECK(integrate(s.c2()) == casnati(d, r));
      CHECK(rr::chi(v, s) == Rational(r * d));
      const GradedClass h = v.hyperplane();
      CHECK(rr::chi(v, chern::twist(s, -h)) == Rational(0));
      CHECK(rr::chi(v, chern::twist(s, Rational(-2) * h)) == Rational(0));
    }
  }
}

TEST_CASE("Ulrich solver on threefolds in P^4") {
  const ChernVector e = rr::solve_ulrich_chern(VarietyModel::hypersurface_p4(3), 3);
  CHECK(integrate(e.c3()) == Rational(6));

  for (int d = 2; d <= 8; ++d) {
    const VarietyModel v = VarietyModel::hypersurface_p4(d);
    for (int r = 2; r <= 6; ++r) {
      if (r * (d - 1) % 2) continue;
      const ChernVector s = rr::solve_ulrich_chern(v, r);
      const Rational c3 = Rational(r * d, 48) * Rational((d - 1) * (d - 1) * (r - 2) * (r * d - r + 2));
      CHECK(integrate(s.c3()) == c3);
      if (r == 2) CHECK(s.c3().is_zero());
      CHECK(rr::chi(v, s) == Rational(r * d));
      for (int p = 1; p <= 3; ++p) {
        CHECK(rr::chi(v, chern::twist(s, Rational(-p) * v.hyperplane())) == Rational(0));
      }
    }
  }
}

TEST_CASE("Ulrich solver error paths") {
  CHECK_THROWS_WITH_AS(rr::solve_ulrich_chern(VarietyModel::hypersurface_p3(4), 1),
                       doctest::Contains("r(d-1) must be even"), ParityError);
  CHECK_THROWS_AS(rr::solve_ulrich_chern(VarietyModel::hypersurface_p3(3), 1), InconsistentData);
  CHECK_THROWS_AS(rr::solve_ulrich_chern(VarietyModel::hypersurface_p4(5), 1), InconsistentData);
  CHECK_THROWS_AS(rr::solve_ulrich_chern(VarietyModel::curve(1, 3), 2), InputError);
  CHECK_THROWS_AS(rr::solve_ulrich_chern(VarietyModel::hypersurface_p3(3), 0), InputError);
  // Planes and hyperplanes carry O as an Ulrich line bundle.
  const ChernVector o = rr::solve_ulrich_chern(VarietyModel::hypersurface_p3(1), 1);
  CHECK(o.c1().is_zero());
  CHECK(o.c2().is_zero());
}

TEST_CASE("todd class of P^3") {
  const VarietyModel p3 = VarietyModel::hypersurface_p4(1);
  const GradedClass td = rr::todd_class(p3.tangent());
  const Ring& ring = p3.ring();
  const GradedClass expected = GradedClass::one(ring) + GradedClass::hyperplane_power(ring, 1, Rational(2)) +
                               GradedClass::hyperplane_power(ring, 2, Rational(11, 6)) +
                               GradedClass::hyperplane_power(ring, 3, Rational(1));
  CHECK(td == expected);
}
