#include "ulrichnorm/rr/riemann_roch.hpp"

#include "ulrichnorm/chern/chern.hpp"
#include "ulrichnorm/error.hpp"
#include "ulrichnorm/exactalg/linear_solve.hpp"

namespace ulrichnorm::rr {

namespace {

void require_dimension(const ChernVector& e, int n, const char* what) {
  if (e.ring()->dimension() != n) {
    throw RingMismatch(std::string(what) + " needs a " + std::to_string(n) + "-dimensional ring, got dimension " +
                       std::to_string(e.ring()->dimension()));
  }
}

// exp(qH), truncated.
GradedClass exp_h(const Ring& ring, const Rational& q) {
  GradedClass out = GradedClass::one(ring);
  Rational coeff(1);
  for (int k = 1; k <= ring->dimension(); ++k) {
    coeff = coeff * q / Rational(k);
    out += GradedClass::hyperplane_power(ring, k, coeff);
  }
  return out;
}

GradedClass variety_todd(const VarietyModel& v) {
  const Ring& ring = v.ring();
  switch (v.dimension()) {
    case 1: return GradedClass::one(ring) - v.canonical() * Rational(1, 2);
    case 2: return GradedClass::one(ring) - v.canonical() * Rational(1, 2) + v.point_class(v.chi_structure_sheaf());
    default: return todd_class(v.tangent());
  }
}

// ch of formal data (r, c1, c2, c3) without rank-vanishing checks.
GradedClass formal_ch(int rank, const GradedClass& c1, const GradedClass& c2, const GradedClass& c3) {
  const Ring& ring = c1.ring();
  GradedClass ch = GradedClass::scalar(ring, Rational(rank)) + c1 + (c1 * c1 - Rational(2) * c2) * Rational(1, 2);
  ch += (c1 * c1 * c1 - Rational(3) * (c1 * c2) + Rational(3) * c3) * Rational(1, 6);
  return ch;
}

}  // namespace

Rational chi_curve(int genus, const ChernVector& e) {
  require_dimension(e, 1, "chi_curve");
  if (genus < 0) throw InputError("genus must be >= 0");
  return integrate(e.c1()) + Rational(e.rank()) * Rational(1 - genus);
}

Rational chi_surface(const VarietyModel& v, const ChernVector& e) {
  if (!v.is_surface()) throw InputError("chi_surface needs a surface model");
  require_same_ring(v.ring(), e.ring());
  const GradedClass& c1 = e.c1();
  const GradedClass k = v.canonical();
  return Rational(e.rank()) * v.chi_structure_sheaf() + (intersect(c1, c1) - intersect(c1, k)) / Rational(2) -
         integrate(e.c2());
}

Rational chi_threefold_hypersurface(int degree, const ChernVector& e) {
  const VarietyModel v = VarietyModel::hypersurface_p4(degree);
  require_same_ring(v.ring(), e.ring());
  return integrate((chern::chern_character(e) * todd_class(v.tangent())).part(3));
}

Rational chi(const VarietyModel& v, const ChernVector& e) {
  switch (v.kind()) {
    case VarietyModel::Kind::Curve:
      require_same_ring(v.ring(), e.ring());
      return chi_curve(v.genus(), e);
    case VarietyModel::Kind::Surface:
    case VarietyModel::Kind::HypersurfaceP3: return chi_surface(v, e);
    case VarietyModel::Kind::HypersurfaceP4: return chi_threefold_hypersurface(v.hypersurface_degree(), e);
  }
  throw InputError("unknown variety kind");
}

GradedClass todd_class(const ChernVector& tangent) {
  const GradedClass& c1 = tangent.c1();
  const GradedClass& c2 = tangent.c2();
  GradedClass td = GradedClass::one(tangent.ring()) + c1 * Rational(1, 2) + (c1 * c1 + c2) * Rational(1, 12);
  td += (c1 * c2) * Rational(1, 24);
  return td;
}

void require_parity(int degree, int rank) {
  if ((static_cast<long long>(rank) * (degree - 1)) % 2 != 0) {
    throw ParityError("r(d-1) must be even; got r = " + std::to_string(rank) + ", d = " + std::to_string(degree));
  }
}

GradedClass ulrich_c1(const VarietyModel& v, int rank) {
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  if (v.is_hypersurface()) require_parity(v.hypersurface_degree(), rank);
  const GradedClass h = v.hyperplane();
  return (v.canonical() + Rational(v.dimension() + 1) * h) * Rational(rank, 2);
}

ChernVector solve_ulrich_chern(const VarietyModel& v, int rank) {
  if (!v.is_hypersurface()) {
    throw InputError("the Ulrich solver needs a hypersurface in P^3 or P^4; supply Chern data for other varieties");
  }
  const GradedClass c1 = ulrich_c1(v, rank);
  const Ring& ring = v.ring();
  const int n = v.dimension();
  const GradedClass td = variety_todd(v);

  // chi(E(-p)) is affine in the unknown coefficients u (of H^2) and w (of H^3).
  auto chi_twist = [&](int p, const Rational& u, const Rational& w) {
    const GradedClass c2 = GradedClass::hyperplane_power(ring, 2, u);
    const GradedClass c3 = n >= 3 ? GradedClass::hyperplane_power(ring, 3, w) : GradedClass::zero(ring);
    return integrate((formal_ch(rank, c1, c2, c3) * exp_h(ring, Rational(-p)) * td).part(n));
  };

  const int unknowns = n - 1;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int p = 1; p <= n; ++p) {
    const Rational base = chi_twist(p, Rational(0), Rational(0));
    std::vector<Rational> row{chi_twist(p, Rational(1), Rational(0)) - base};
    if (unknowns == 2) row.push_back(chi_twist(p, Rational(0), Rational(1)) - base);
    a.push_back(std::move(row));
    b.push_back(-base);
  }
  std::vector<Rational> sol;
  try {
    sol = solve_exact(a, b);
  } catch (const InconsistentData& ex) {
    throw InconsistentData("Ulrich vanishing system has no solution for r = " + std::to_string(rank) + ": " +
                           ex.what());
  }

  const GradedClass c2 = GradedClass::hyperplane_power(ring, 2, sol[0]);
  std::optional<GradedClass> c3;
  if (n >= 3) c3 = GradedClass::hyperplane_power(ring, 3, sol[1]);
  try {
    return ChernVector(rank, c1, c2, c3);
  } catch (const InputError& ex) {
    throw InconsistentData("no rank-" + std::to_string(rank) + " Ulrich bundle on " + v.describe() +
                           ": the vanishing system forces classes above the rank (" + ex.what() + ")");
  }
}

}  // namespace ulrichnorm::rr
