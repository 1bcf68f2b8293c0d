#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ulrichnorm/exactalg/rational.hpp"

namespace ulrichnorm {

/// Pic-rank-one truncated ring Q[H]/(H^{n+1}) with H^n = degree.
struct RankOneShape {
  int dimension = 0;
  Rational degree;

  friend bool operator==(const RankOneShape&, const RankOneShape&) = default;
};

/// Numerical surface lattice: divisor classes are rational combinations of
/// named basis symbols, paired by a symmetric intersection matrix. Degree-2
/// classes are stored already integrated.
struct SurfaceLatticeShape {
  std::vector<std::string> basis;
  std::vector<std::vector<Rational>> form;

  friend bool operator==(const SurfaceLatticeShape&, const SurfaceLatticeShape&) = default;
};

class ClassRing;
using Ring = std::shared_ptr<const ClassRing>;
using DivisorCoords = std::vector<Rational>;

/// Truncated graded ring of numerical classes on a variety of dimension <= 3.
///
/// Codimension-k classes for k >= 2 are single rationals: the coefficient of
/// H^k on a rank-one ring, or the degree on a surface lattice.
class ClassRing {
 public:
  static Ring rank_one(int dimension, Rational degree);
  /// Validates shape and symmetry; the basis must contain "H".
  static Ring surface(std::vector<std::string> basis, std::vector<std::vector<Rational>> form);
  /// Basis {H, K} with the given intersection numbers.
  static Ring surface_hk(Rational h2, Rational hk, Rational k2);

  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::size_t divisor_rank() const;
  [[nodiscard]] const std::variant<RankOneShape, SurfaceLatticeShape>& shape() const { return shape_; }
  [[nodiscard]] bool is_rank_one() const { return std::holds_alternative<RankOneShape>(shape_); }

  /// Coordinates of H.
  [[nodiscard]] DivisorCoords hyperplane() const;
  /// Coordinates of a named basis symbol ("H" always exists on rank-one rings).
  [[nodiscard]] std::optional<DivisorCoords> symbol(const std::string& name) const;

  /// Product of two divisor classes as a codimension-2 entry.
  [[nodiscard]] Rational pair(const DivisorCoords& a, const DivisorCoords& b) const;

  /// Degree H^n.
  [[nodiscard]] Rational top_degree() const;

  friend bool operator==(const ClassRing& a, const ClassRing& b) { return a.shape_ == b.shape_; }

 private:
  explicit ClassRing(std::variant<RankOneShape, SurfaceLatticeShape> shape) : shape_(std::move(shape)) {}

  std::variant<RankOneShape, SurfaceLatticeShape> shape_;
};

/// Throws RingMismatch unless both handles refer to equal rings.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace ulrichnorm
