#pragma once

#include <string>
#include <variant>

#include "ulrichnorm/chern/chern_vector.hpp"

namespace ulrichnorm {

/// Numeric model of a polarized variety: a class ring plus the invariants the
/// Riemann-Roch formulas need. H always denotes the polarization.
class VarietyModel {
 public:
  enum class Kind { Curve, Surface, HypersurfaceP3, HypersurfaceP4 };

  /// Smooth curve of genus g with a polarization of degree d.
  static VarietyModel curve(int genus, int degree);
  /// Surface on a lattice containing H and K. q and p_g must satisfy
  /// chi(O_S) = 1 - q + p_g.
  static VarietyModel surface(Ring lattice, Rational chi, int q, int pg);
  /// Surface on a lattice with p_g derived from chi and q.
  static VarietyModel surface(Ring lattice, Rational chi, int q = 0);
  /// Smooth degree-d surface in P^3.
  static VarietyModel hypersurface_p3(int degree);
  /// Smooth degree-d threefold in P^4.
  static VarietyModel hypersurface_p4(int degree);
  /// Complete intersection of type (2, a) in P^4 with Pic = Z H:
  /// d = 2a, K = (a - 3)H, chi(O) = d(d^2 - 9d + 26)/24.
  static VarietyModel complete_intersection_2a(int a);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int dimension() const { return ring_->dimension(); }
  [[nodiscard]] bool is_surface() const { return kind_ == Kind::Surface || kind_ == Kind::HypersurfaceP3; }
  [[nodiscard]] bool is_hypersurface() const {
    return kind_ == Kind::HypersurfaceP3 || kind_ == Kind::HypersurfaceP4;
  }
  [[nodiscard]] const Ring& ring() const { return ring_; }

  /// H^n.
  [[nodiscard]] Rational degree() const { return ring_->top_degree(); }
  /// Hypersurface degree (throws for other kinds).
  [[nodiscard]] int hypersurface_degree() const;
  /// Throws InputError for non-curves.
  [[nodiscard]] int genus() const;
  [[nodiscard]] int irregularity() const { return q_; }
  [[nodiscard]] int geometric_genus() const { return pg_; }

  [[nodiscard]] GradedClass hyperplane() const { return GradedClass::hyperplane_power(ring_, 1); }
  /// Canonical class (numerical, as a divisor).
  [[nodiscard]] GradedClass canonical() const;
  /// chi(O_X).
  [[nodiscard]] Rational chi_structure_sheaf() const;
  /// Class of degree q at the top codimension.
  [[nodiscard]] GradedClass point_class(const Rational& q) const;

  /// Tangent bundle of a hypersurface: c(T) = (1+H)^{n+2} / (1+dH), truncated.
  [[nodiscard]] ChernVector tangent() const;

  [[nodiscard]] std::string describe() const;

 private:
  VarietyModel(Kind kind, Ring ring) : kind_(kind), ring_(std::move(ring)) {}

  Kind kind_;
  Ring ring_;
  int genus_ = 0;
  int hyp_degree_ = 0;
  Rational chi_;
  int q_ = 0;
  int pg_ = 0;
};

}  // namespace ulrichnorm
