#pragma once

#include <string>

#include "ulrichnorm/exactalg/class_ring.hpp"

namespace ulrichnorm {

/// Element of a truncated class ring, possibly inhomogeneous.
///
/// Components above the ring dimension are always zero; products truncate.
class GradedClass {
 public:
  explicit GradedClass(Ring ring);

  static GradedClass zero(const Ring& ring) { return GradedClass(ring); }
  static GradedClass scalar(const Ring& ring, const Rational& q);
  static GradedClass one(const Ring& ring) { return scalar(ring, Rational(1)); }
  static GradedClass divisor(const Ring& ring, DivisorCoords coords);
  /// q * H^k. On a surface lattice q * H^2 is stored as its degree.
  static GradedClass hyperplane_power(const Ring& ring, int k, const Rational& q = Rational(1));
  /// Codimension k >= 2 entry in the ring's native representation.
  static GradedClass top(const Ring& ring, int k, const Rational& value);
  /// A named basis divisor ("H", "K", ...); throws InputError if missing.
  static GradedClass symbol(const Ring& ring, const std::string& name, const Rational& q = Rational(1));

  [[nodiscard]] const Ring& ring() const { return ring_; }
  [[nodiscard]] const Rational& codim0() const { return c0_; }
  [[nodiscard]] const DivisorCoords& codim1() const { return c1_; }
  /// Native entry at codimension 2 or 3.
  [[nodiscard]] const Rational& entry(int k) const;

  /// Homogeneous part of codimension k.
  [[nodiscard]] GradedClass part(int k) const;
  /// Drops every component of codimension > up_to.
  [[nodiscard]] GradedClass truncated(int up_to) const;
  [[nodiscard]] bool is_zero() const;
  /// Zero in every codimension other than k.
  [[nodiscard]] bool is_homogeneous(int k) const;

  /// Multiplicative inverse; throws InputError when the codim-0 part is 0.
  [[nodiscard]] GradedClass inverse() const;
  [[nodiscard]] GradedClass pow(unsigned e) const;

  GradedClass& operator+=(const GradedClass& rhs);
  GradedClass& operator-=(const GradedClass& rhs);
  GradedClass& operator*=(const Rational& q);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& q) { return a *= q; }
  friend GradedClass operator*(const Rational& q, GradedClass a) { return a *= q; }
  /// Cup product.
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  GradedClass operator-() const;

  friend bool operator==(const GradedClass& a, const GradedClass& b);

  [[nodiscard]] std::string to_string() const;

 private:
  Ring ring_;
  Rational c0_;
  DivisorCoords c1_;
  Rational c2_;
  Rational c3_;
};

/// Integration map: the codim-k component paired with H^{n-k} on a rank-one
/// ring, or evaluated by the intersection form on a surface lattice.
Rational ring_degree(const Ring& ring, const GradedClass& cls, int codim);

/// Degree of the top-codimension component of cls.
Rational integrate(const GradedClass& cls);

/// Intersection number D1 . D2 . H^{n-2} of two classes' codim-1 parts.
Rational intersect(const GradedClass& a, const GradedClass& b);

/// a and b have equal intersection numbers against every basis divisor.
bool numerically_equal_divisors(const GradedClass& a, const GradedClass& b);

}  // namespace ulrichnorm
