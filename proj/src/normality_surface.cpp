#include "ulrichnorm/chern/chern.hpp"
#include "ulrichnorm/error.hpp"
#include "ulrichnorm/normality/surface.hpp"

namespace ulrichnorm::normality {

namespace {
using Q = Rational;
}

ChernVector syzygy_chern(const ChernVector& e, int h) {
  if (h < e.rank()) throw InputError("h0 must be at least the rank");
  const Ring& ring = e.ring();
  const GradedClass& c1 = e.c1();
  const GradedClass& c2 = e.c2();
  std::optional<GradedClass> c3;
  if (ring->dimension() < 3) {
    c3 = GradedClass::zero(ring);
  } else if (e.has_c3()) {
    c3 = -(c1 * c1 * c1) + Q(2) * (c1 * c2) - e.c3();
  }
  return ChernVector(h - e.rank(), -c1, c1 * c1 - c2, std::move(c3));
}

AcmResult surface_acm_criterion(int h, int r, const Rational& c1sq, const Rational& c1k, const Rational& c2) {
  if (r < 2) throw InputError("the degeneracy criterion needs r >= 2, got " + std::to_string(r));
  if (h < r + 3) {
    throw InputError("the degeneracy criterion needs h >= r + 3, got h = " + std::to_string(h) +
                     ", r = " + std::to_string(r));
  }
  const Q hq(h);
  const Q rq(r);
  const Q s = hq - rq;
  DegeneracyData data;
  data.lambda = binomial(s, 2) - Q(1);
  data.z_degree = (s - Q(2)) * ((s + Q(1)) * c1sq - Q(2) * c2) / Q(2);
  data.c_multiple = h - r - 1;
  const Q m(data.c_multiple);
  data.c_squared = m * m * c1sq;
  data.c_dot_k = m * c1k;
  data.genus_c = Q(1) + (data.c_squared + data.c_dot_k) / Q(2);
  data.h0_z_lower = data.lambda + Q(1);
  data.lhs = (s - Q(1)) * c1k + Q(2) * (s - Q(2)) * c2 + hq * (hq - Q(1));
  data.rhs = (s - Q(3)) * c1sq + rq * (Q(2) * hq - rq - Q(1));
  data.h1_lower = (data.lhs - data.rhs) / Q(2);
  data.h1_lower_rr = data.h0_z_lower - data.z_degree + data.genus_c - Q(1);
  if (data.h1_lower != data.h1_lower_rr) {
    throw InconsistentData("h1(C, Z) bounds disagree: " + data.h1_lower.to_string() + " vs " +
                           data.h1_lower_rr.to_string());
  }

  const std::string hyp = "(h-r-1)c1.K + 2(h-r-2)c2 + h(h-1) > (h-r-3)c1^2 + r(2h-r-1)";
  AcmResult out{inconclusive("surface-degeneracy", Witness::of(data.lhs, data.rhs, hyp)), data};
  out.verdict.k = 2;
  if (data.lhs > data.rhs) {
    out.verdict.status = VerdictStatus::NotKNormal;
    out.verdict.hypothesis = hyp;
    out.verdict.notes.push_back("h1(C, Z) >= " + data.h1_lower.to_string() + " > 0, so Z is special on C");
  }
  out.verdict.notes.push_back("assumes q = p_g = 0 and E ample and 0-regular");
  return out;
}

AcmResult surface_acm_criterion(const VarietyModel& v, const ChernVector& e, int h) {
  if (!v.is_surface()) throw InputError("the degeneracy criterion needs a surface model");
  require_same_ring(v.ring(), e.ring());
  const GradedClass& c1 = e.c1();
  AcmResult out = surface_acm_criterion(h, e.rank(), intersect(c1, c1), intersect(c1, v.canonical()),
                                        integrate(e.c2()));
  if (v.irregularity() != 0 || v.geometric_genus() != 0) {
    out.verdict.notes.push_back("this surface has q = " + std::to_string(v.irregularity()) +
                                ", p_g = " + std::to_string(v.geometric_genus()) +
                                "; the inequality is evaluated numerically only");
  }
  return out;
}

SectionalResult sectional_curve_criterion(const VarietyModel& v, const ChernVector& e) {
  const int n = v.dimension();
  if (n < 1 || n > 3) throw OutOfRange("sectional-curve criterion needs dimension 1..3, got " + std::to_string(n));
  require_same_ring(v.ring(), e.ring());
  const GradedClass s = chern::segre_dual(e, n);
  SectionalResult out;
  out.degree = integrate(s.part(n));
  out.adjoint_degree = integrate((v.canonical() + e.c1()) * s.part(n - 1));
  out.genus = Q(1) + (out.adjoint_degree + Q(n - 2) * out.degree) / Q(2);
  out.degree_form = out.degree >= Q(2) * out.genus + Q(1);
  out.segre_form = Q(3 - n) * out.degree >= Q(3) + out.adjoint_degree;
  if (out.degree_form != out.segre_form) {
    throw InconsistentData("sectional-curve criterion: degree and Segre forms disagree");
  }

  const std::string hyp = "deg P(E) >= 2g + 1 for the sectional curve";
  const Witness w = Witness::of(out.degree, Q(2) * out.genus + Q(1), "s_n(E*) vs 2g + 1");
  const bool regular = v.irregularity() == 0;
  if (out.degree_form && regular && e.rank() >= 2) {
    out.verdict = positive("sectional-curve-acm", hyp, w);
  } else {
    out.verdict = inconclusive("sectional-curve-acm", w);
    out.verdict.hypothesis = out.degree_form ? "inequality holds but hypotheses fail" : "not met: " + hyp;
    if (!regular) out.verdict.notes.push_back("X is irregular (q > 0)");
    if (e.rank() < 2) out.verdict.notes.push_back("needs rank >= 2");
  }
  out.verdict.notes.push_back("assumes E very ample");
  return out;
}

}  // namespace ulrichnorm::normality
