#include "ulrichnorm/ulrich/ulrich.hpp"

#include "ulrichnorm/chern/chern.hpp"
#include "ulrichnorm/error.hpp"
#include "ulrichnorm/rr/riemann_roch.hpp"

namespace ulrichnorm::ulrich {

namespace {

using Q = Rational;

void require_rank(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
}

void require_count(const Q& value, const char* what) {
  if (!value.is_integer() || value.sign() < 0) {
    throw InconsistentData(std::string("data error: ") + what + " = " + value.to_string() +
                           " is not a nonnegative integer");
  }
}

}  // namespace

UlrichData make_ulrich(const VarietyModel& v, int rank) {
  require_rank(rank);
  ChernVector c = rr::solve_ulrich_chern(v, rank);
  return UlrichData{v, rank, std::move(c), Q(rank) * v.degree()};
}

UlrichData make_ulrich(const VarietyModel& v, int rank, ChernVector chern) {
  require_rank(rank);
  if (chern.rank() != rank) {
    throw InputError("Chern data has rank " + std::to_string(chern.rank()) + ", expected " + std::to_string(rank));
  }
  require_same_ring(v.ring(), chern.ring());
  if (v.is_hypersurface()) {
    const ChernVector solved = rr::solve_ulrich_chern(v, rank);
    if (!(solved == chern)) {
      throw InconsistentData("Chern data " + chern.to_string() + " differs from the Ulrich classes " +
                             solved.to_string());
    }
  } else {
    const GradedClass expected = rr::ulrich_c1(v, rank);
    const GradedClass h = v.hyperplane();
    const Q lhs = v.dimension() == 1 ? integrate(chern.c1()) : intersect(chern.c1(), h);
    const Q rhs = v.dimension() == 1 ? integrate(expected) : intersect(expected, h);
    if (lhs != rhs) {
      throw InconsistentData("c1.H = " + lhs.to_string() + " but an Ulrich bundle needs " + rhs.to_string());
    }
    if (v.is_surface()) {
      const GradedClass& c1 = chern.c1();
      const Q c2 = casnati_c2(rank, v.degree(), v.chi_structure_sheaf(), intersect(c1, c1),
                              intersect(c1, v.canonical()));
      if (integrate(chern.c2()) != c2) {
        throw InconsistentData("c2 = " + integrate(chern.c2()).to_string() + " but the Casnati formula gives " +
                               c2.to_string());
      }
    }
  }
  return UlrichData{v, rank, std::move(chern), Q(rank) * v.degree()};
}

Rational casnati_c2(int rank, const Rational& degree, const Rational& chi, const Rational& c1sq,
                    const Rational& c1k) {
  const Q r(rank);
  return (c1sq - c1k) / Q(2) + r * chi - r * degree;
}

PowerCounts h0_powers_from_invariants(int rank, const Rational& d, const Rational& chi, const Rational& c1sq,
                                      const Rational& c1k) {
  require_rank(rank);
  const Q r(rank);
  PowerCounts out;
  out.tensor2 = c1sq + r * r * (Q(2) * d - chi);
  out.sym2 = r * (r + Q(2)) * d + (c1sq + c1k) / Q(2) - r * (r + Q(3)) / Q(2) * chi;
  out.sym3 = (r + Q(2)) / Q(6) *
             (Q(3) * c1sq + Q(3) * c1k + Q(3) * r * d * (r + Q(3)) - Q(2) * r * chi * (r + Q(4)));
  return out;
}

PowerCounts h0_powers_canonical(int rank, const Rational& d, const Rational& chi, const Rational& k2,
                                const Rational& kh) {
  require_rank(rank);
  const Q r(rank);
  PowerCounts out;
  out.tensor2 = r * r / Q(4) * (Q(17) * d + Q(6) * kh + k2 - Q(4) * chi);
  out.sym2 = r / Q(8) *
             ((Q(17) * r + Q(16)) * d + (Q(2) + r) * k2 + Q(6) * (r + Q(1)) * kh - Q(4) * (r + Q(3)) * chi);
  out.sym3 = r / Q(24) * (r + Q(2)) *
             (Q(3) * d * (Q(13) * r + Q(12)) + Q(3) * (r + Q(2)) * k2 + Q(18) * (r + Q(1)) * kh -
              Q(8) * (r + Q(4)) * chi);
  return out;
}

PowerCounts h0_powers_surface(const UlrichData& u) {
  const VarietyModel& v = u.variety;
  if (!v.is_surface()) throw InputError("h0_powers_surface needs a surface model");
  require_same_ring(v.ring(), u.chern.ring());
  const GradedClass& c1 = u.chern.c1();
  const GradedClass k = v.canonical();
  const GradedClass h = v.hyperplane();
  const Q d = v.degree();
  const Q chi = v.chi_structure_sheaf();
  const Q c1sq = intersect(c1, c1);
  const Q c1k = intersect(c1, k);

  const Q c2 = casnati_c2(u.rank, d, chi, c1sq, c1k);
  if (integrate(u.chern.c2()) != c2) {
    throw InconsistentData("c2 = " + integrate(u.chern.c2()).to_string() + " violates the Casnati formula (" +
                           c2.to_string() + ")");
  }

  const PowerCounts out = h0_powers_from_invariants(u.rank, d, chi, c1sq, c1k);
  if (numerically_equal_divisors(c1, rr::ulrich_c1(v, u.rank))) {
    const PowerCounts special = h0_powers_canonical(u.rank, d, chi, intersect(k, k), intersect(k, h));
    if (!(special == out)) {
      throw InconsistentData("general and canonical section-count formulas disagree");
    }
  }
  require_count(out.tensor2, "h0(E(x)E)");
  require_count(out.sym2, "h0(S^2 E)");
  require_count(out.sym3, "h0(S^3 E)");
  return out;
}

PowerCounts h0_powers_via_hrr(const UlrichData& u) {
  if (!u.variety.is_surface()) throw InputError("h0_powers_via_hrr needs a surface model");
  return PowerCounts{rr::chi_surface(u.variety, chern::tensor_square(u.chern)),
                     rr::chi_surface(u.variety, chern::sym2(u.chern)),
                     rr::chi_surface(u.variety, chern::sym3(u.chern))};
}

PowerCounts h0_powers_p3_hypersurface(int degree, int rank) {
  require_rank(rank);
  if (degree < 2) throw InputError("surface degree must be >= 2, got " + std::to_string(degree));
  rr::require_parity(degree, rank);
  const Q r(rank);
  const Q d(degree);
  PowerCounts out;
  out.tensor2 = r * r * d / Q(12) * (d + Q(1)) * (d + Q(5));
  out.sym2 = r * d / Q(24) * (d + Q(1)) * ((d + Q(5)) * r + Q(6));
  out.sym3 = r * d * (d + Q(1)) * (r + Q(2)) * (r + Q(4) + d * (Q(5) * r + Q(2))) / Q(72);
  return out;
}

P4Counts chi_powers_p4_hypersurface(int degree, int rank) {
  require_rank(rank);
  if (degree < 1) throw InputError("threefold degree must be >= 1, got " + std::to_string(degree));
  rr::require_parity(degree, rank);
  const Q r(rank);
  const Q d(degree);
  const Q dm1sq = (d - Q(1)) * (d - Q(1));
  P4Counts out;
  out.chi_tensor2 = r * r * d / Q(8) * (d + Q(1)) * (d + Q(3));
  out.chi_sym2 = r * d / Q(48) * (d + Q(1)) * (d + Q(3)) * (Q(3) * r + Q(4) - d);
  out.c3_tensor2 = r * r * d / Q(12) * dm1sq * (r * r - Q(2)) * (Q(2) * r * r * (d - Q(1)) + Q(3) - d);
  out.c3_sym2 = r * d / Q(48) * dm1sq * (r + Q(2)) * (r * r + r - Q(4)) * (r * r * (d - Q(1)) + Q(2));
  return out;
}

P4Counts chi_powers_via_hrr(const UlrichData& u) {
  if (u.variety.kind() != VarietyModel::Kind::HypersurfaceP4) {
    throw InputError("chi_powers_via_hrr needs a threefold hypersurface");
  }
  const int d = u.variety.hypersurface_degree();
  const ChernVector t2 = chern::tensor_square(u.chern);
  const ChernVector s2 = chern::sym2(u.chern);
  return P4Counts{rr::chi_threefold_hypersurface(d, t2), rr::chi_threefold_hypersurface(d, s2),
                  integrate(t2.c3()), integrate(s2.c3())};
}

Rational threefold_c3(int degree, int rank) {
  require_rank(rank);
  const Q r(rank);
  const Q d(degree);
  return r * d / Q(48) * (d - Q(1)) * (d - Q(1)) * (r - Q(2)) * (r * d - r + Q(2));
}

}  // namespace ulrichnorm::ulrich
