#include "ulrichnorm/rr/variety.hpp"

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

VarietyModel VarietyModel::curve(int genus, int degree) {
  if (genus < 0) throw InputError("genus must be >= 0, got " + std::to_string(genus));
  if (degree < 1) throw InputError("degree must be >= 1, got " + std::to_string(degree));
  VarietyModel v(Kind::Curve, ClassRing::rank_one(1, Rational(degree)));
  v.genus_ = genus;
  v.chi_ = Rational(1 - genus);
  v.q_ = genus;
  return v;
}

VarietyModel VarietyModel::surface(Ring lattice, Rational chi, int q, int pg) {
  if (lattice->is_rank_one() || lattice->dimension() != 2) {
    throw InputError("surface model needs a surface lattice");
  }
  if (!lattice->symbol("K")) throw InputError("surface lattice must contain the canonical class K");
  if (q < 0 || pg < 0) throw InputError("q and p_g must be nonnegative");
  if (chi != Rational(1 - q + pg)) {
    throw InputError("chi(O_S) = " + chi.to_string() + " contradicts 1 - q + p_g = " + std::to_string(1 - q + pg));
  }
  VarietyModel v(Kind::Surface, std::move(lattice));
  v.chi_ = std::move(chi);
  v.q_ = q;
  v.pg_ = pg;
  return v;
}

VarietyModel VarietyModel::surface(Ring lattice, Rational chi, int q) {
  const Rational pg = chi - Rational(1) + Rational(q);
  if (!pg.is_integer() || pg.sign() < 0) {
    throw InputError("chi(O_S) = " + chi.to_string() + " with q = " + std::to_string(q) +
                     " gives p_g = " + pg.to_string() + ", not a nonnegative integer");
  }
  return surface(std::move(lattice), std::move(chi), q, static_cast<int>(pg.to_int64()));
}

VarietyModel VarietyModel::hypersurface_p3(int degree) {
  if (degree < 1) throw InputError("hypersurface degree must be >= 1, got " + std::to_string(degree));
  VarietyModel v(Kind::HypersurfaceP3, ClassRing::rank_one(2, Rational(degree)));
  v.hyp_degree_ = degree;
  const Rational d(degree);
  v.chi_ = d * (d * d - Rational(6) * d + Rational(11)) / Rational(6);
  v.pg_ = static_cast<int>((v.chi_ - Rational(1)).to_int64());
  return v;
}

VarietyModel VarietyModel::hypersurface_p4(int degree) {
  if (degree < 1) throw InputError("hypersurface degree must be >= 1, got " + std::to_string(degree));
  VarietyModel v(Kind::HypersurfaceP4, ClassRing::rank_one(3, Rational(degree)));
  v.hyp_degree_ = degree;
  return v;
}

VarietyModel VarietyModel::complete_intersection_2a(int a) {
  if (a < 1) throw InputError("complete intersection needs a >= 1");
  const Rational d(2 * a);
  const Rational kh = d * Rational(a - 3);
  const Rational k2 = d * Rational(a - 3) * Rational(a - 3);
  const Rational chi = d * (d * d - Rational(9) * d + Rational(26)) / Rational(24);
  return surface(ClassRing::surface_hk(d, kh, k2), chi, 0);
}

int VarietyModel::hypersurface_degree() const {
  if (!is_hypersurface()) throw InputError("not a hypersurface model");
  return hyp_degree_;
}

int VarietyModel::genus() const {
  if (kind_ != Kind::Curve) throw InputError("genus is only defined for curve models");
  return genus_;
}

GradedClass VarietyModel::canonical() const {
  switch (kind_) {
    case Kind::Curve: return GradedClass::hyperplane_power(ring_, 1, Rational(2 * genus_ - 2) / degree());
    case Kind::Surface: return GradedClass::symbol(ring_, "K");
    case Kind::HypersurfaceP3: return GradedClass::hyperplane_power(ring_, 1, Rational(hyp_degree_ - 4));
    case Kind::HypersurfaceP4: return GradedClass::hyperplane_power(ring_, 1, Rational(hyp_degree_ - 5));
  }
  throw InputError("unknown variety kind");
}

Rational VarietyModel::chi_structure_sheaf() const {
  if (kind_ != Kind::HypersurfaceP4) return chi_;
  // Degree-3 Todd term c1(T)c2(T)/24.
  const ChernVector t = tangent();
  return integrate(t.c1() * t.c2()) / Rational(24);
}

GradedClass VarietyModel::point_class(const Rational& q) const {
  const int n = dimension();
  if (n == 1) return GradedClass::hyperplane_power(ring_, 1, q / degree());
  if (ring_->is_rank_one()) return GradedClass::top(ring_, n, q / degree());
  return GradedClass::top(ring_, n, q);
}

ChernVector VarietyModel::tangent() const {
  if (!is_hypersurface()) throw InputError("tangent classes are modeled for hypersurfaces only");
  const GradedClass one = GradedClass::one(ring_);
  const GradedClass h = hyperplane();
  const int n = dimension();
  const GradedClass c = (one + h).pow(static_cast<unsigned>(n + 2)) *
                        (one + Rational(hyp_degree_) * h).inverse();
  std::optional<GradedClass> c3;
  if (n >= 3) c3 = c.part(3);
  return ChernVector(n, c.part(1), c.part(2), std::move(c3));
}

std::string VarietyModel::describe() const {
  switch (kind_) {
    case Kind::Curve:
      return "curve of genus " + std::to_string(genus_) + " with polarization of degree " + degree().to_string();
    case Kind::Surface: {
      const GradedClass h = hyperplane();
      const GradedClass k = canonical();
      return "surface with H^2 = " + intersect(h, h).to_string() + ", H.K = " + intersect(h, k).to_string() +
             ", K^2 = " + intersect(k, k).to_string() + ", chi(O) = " + chi_.to_string();
    }
    case Kind::HypersurfaceP3: return "smooth surface of degree " + std::to_string(hyp_degree_) + " in P^3";
    case Kind::HypersurfaceP4: return "smooth threefold of degree " + std::to_string(hyp_degree_) + " in P^4";
  }
  return "?";
}

}  // namespace ulrichnorm
