#include "ulrichnorm/exactalg/class_ring.hpp"

#include <algorithm>

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

Ring ClassRing::rank_one(int dimension, Rational degree) {
  if (dimension < 1 || dimension > 3) {
    throw OutOfRange("rank-one ring dimension must be 1, 2 or 3, got " + std::to_string(dimension));
  }
  if (degree.sign() <= 0) throw InputError("degree H^n must be positive, got " + degree.to_string());
  return Ring(new ClassRing(RankOneShape{dimension, std::move(degree)}));
}

Ring ClassRing::surface(std::vector<std::string> basis, std::vector<std::vector<Rational>> form) {
  const std::size_t n = basis.size();
  if (n == 0) throw InputError("surface lattice needs a non-empty basis");
  if (std::find(basis.begin(), basis.end(), "H") == basis.end()) {
    throw InputError("surface lattice basis must contain H");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::count(basis.begin(), basis.end(), basis[i]) != 1) {
      throw InputError("duplicate basis symbol " + basis[i]);
    }
  }
  if (form.size() != n) throw InputError("intersection matrix must be square of the basis size");
  for (std::size_t i = 0; i < n; ++i) {
    if (form[i].size() != n) throw InputError("intersection matrix must be square of the basis size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (form[i][j] != form[j][i]) throw InputError("intersection matrix must be symmetric");
    }
  }
  const auto h = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), "H") - basis.begin());
  if (form[h][h].sign() <= 0) throw InputError("H^2 must be positive");
  return Ring(new ClassRing(SurfaceLatticeShape{std::move(basis), std::move(form)}));
}

Ring ClassRing::surface_hk(Rational h2, Rational hk, Rational k2) {
  return surface({"H", "K"}, {{h2, hk}, {hk, std::move(k2)}});
}

int ClassRing::dimension() const {
  if (const auto* r = std::get_if<RankOneShape>(&shape_)) return r->dimension;
  return 2;
}

std::size_t ClassRing::divisor_rank() const {
  if (const auto* s = std::get_if<SurfaceLatticeShape>(&shape_)) return s->basis.size();
  return 1;
}

DivisorCoords ClassRing::hyperplane() const { return *symbol("H"); }

std::optional<DivisorCoords> ClassRing::symbol(const std::string& name) const {
  if (is_rank_one()) {
    if (name != "H") return std::nullopt;
    return DivisorCoords{Rational(1)};
  }
  const auto& s = std::get<SurfaceLatticeShape>(shape_);
  const auto it = std::find(s.basis.begin(), s.basis.end(), name);
  if (it == s.basis.end()) return std::nullopt;
  DivisorCoords out(s.basis.size());
  out[static_cast<std::size_t>(it - s.basis.begin())] = Rational(1);
  return out;
}

Rational ClassRing::pair(const DivisorCoords& a, const DivisorCoords& b) const {
  if (a.size() != divisor_rank() || b.size() != divisor_rank()) {
    throw RingMismatch("divisor coordinates do not match the ring's divisor rank");
  }
  if (const auto* r = std::get_if<RankOneShape>(&shape_)) {
    if (r->dimension < 2) return Rational(0);
    return a[0] * b[0];
  }
  const auto& form = std::get<SurfaceLatticeShape>(shape_).form;
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out += a[i] * form[i][j] * b[j];
  }
  return out;
}

Rational ClassRing::top_degree() const {
  if (const auto* r = std::get_if<RankOneShape>(&shape_)) return r->degree;
  const auto h = hyperplane();
  return pair(h, h);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a || !b) throw RingMismatch("null class ring");
  if (a == b) return;
  if (!(*a == *b)) throw RingMismatch("classes belong to different rings");
}

}  // namespace ulrichnorm
