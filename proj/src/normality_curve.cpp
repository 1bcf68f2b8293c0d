#include "ulrichnorm/error.hpp"
#include "ulrichnorm/normality/curve.hpp"

namespace ulrichnorm::normality {

namespace {

using Q = Rational;

void validate(const CurveCase& c) {
  if (c.g < 0) throw InputError("genus must be >= 0, got " + std::to_string(c.g));
  if (c.d < 1) throw InputError("degree must be >= 1, got " + std::to_string(c.d));
  if (c.r < 1) throw InputError("rank must be >= 1, got " + std::to_string(c.r));
  for (int p : c.syzygy_orders) {
    if (p < 2) throw InputError("(N_p) orders must be >= 2, got " + std::to_string(p));
  }
}

NormalityVerdict linear(std::string tag, std::string hypothesis, int d, int bound) {
  const Witness w = Witness::of(Q(d), Q(bound), "d vs " + hypothesis.substr(4));
  if (d > bound) return positive(std::move(tag), std::move(hypothesis), w);
  NormalityVerdict v = inconclusive(std::move(tag), w);
  v.hypothesis = "not met: " + hypothesis;
  return v;
}

NormalityVerdict np_verdict(const CurveCase& c, int p) {
  // d > ((g+p+1) + sqrt(D))/2 with D = g^2 + 2g(3p+1) + (p-1)^2, compared
  // exactly as 2d - g - p - 1 > 0 and (2d - g - p - 1)^2 > D.
  const long long g = c.g;
  const long long s = 2LL * c.d - g - p - 1;
  const long long disc = g * g + 2 * g * (3LL * p + 1) + static_cast<long long>(p - 1) * (p - 1);
  const std::string hyp = "N_" + std::to_string(p) + ": d > ((g+p+1) + sqrt(g^2 + 2g(3p+1) + (p-1)^2))/2";
  NormalityVerdict v;
  if (s <= 0) {
    v = inconclusive("curve-Np", Witness::of(Q(s), Q(0), "sign guard 2d - g - p - 1 vs 0"));
    v.hypothesis = "not met: " + hyp;
  } else {
    const Witness w = Witness::of(Q(s * s), Q(disc), "(2d - g - p - 1)^2 vs g^2 + 2g(3p+1) + (p-1)^2");
    if (s * s > disc) {
      v = positive("curve-Np", hyp, w);
    } else {
      v = inconclusive("curve-Np", w);
      v.hypothesis = "not met: " + hyp;
    }
  }
  v.k = p;
  const bool conj = c.d > c.g + 1 + p;
  v.notes.push_back(std::string("conjecture (not asserted): (N_p) as soon as d > g + 1 + p; ") +
                    (conj ? "satisfied" : "not satisfied") + " here");
  return v;
}

}  // namespace

std::vector<NormalityVerdict> curve_thresholds(const CurveCase& c) {
  validate(c);
  std::vector<NormalityVerdict> out;
  out.push_back(linear("curve-degree", "d > g + 1", c.d, c.g + 1));
  out.back().notes.push_back("slope d + g - 1 > 2g; every Ulrich bundle is strongly k-normal for k >= 2");
  out.push_back(linear("curve-koszul", "d > g + 2", c.d, c.g + 2));
  out.back().notes.push_back("conclusion: (N_1) and the tautological bundle is Koszul");
  for (int p : c.syzygy_orders) out.push_back(np_verdict(c, p));

  {
    const std::string hyp = "d >= g + 2 - Cliff(C)";
    NormalityVerdict v;
    if (!c.cliff) {
      v = inconclusive("general-bundle-clifford");
      v.notes.push_back("Clifford index not supplied");
    } else if (c.g < 2 || c.d < 2) {
      v = inconclusive("general-bundle-clifford");
      v.notes.push_back("needs g >= 2 and d >= 2");
    } else {
      const Witness w = Witness::of(Q(c.d), Q(c.g + 2 - *c.cliff), "d vs g + 2 - Cliff(C)");
      if (c.d >= c.g + 2 - *c.cliff) {
        v = positive("general-bundle-clifford", hyp, w);
      } else {
        v = inconclusive("general-bundle-clifford", w);
        v.hypothesis = "not met: " + hyp;
      }
      v.notes.push_back("assumes a subseries of |B| inducing a morphism etale onto its image");
    }
    v.generic = true;
    v.notes.push_back("generic statement: the general Ulrich bundle of each rank");
    out.push_back(std::move(v));
  }

  {
    const std::string hyp = "general curve, general very ample B, g >= 3, (2d - 3)^2 >= 8g + 1";
    NormalityVerdict v;
    if (!c.general_curve || !c.general_polarization) {
      v = inconclusive("general-curve-mrc");
      v.notes.push_back("needs the general-curve and general-polarization flags");
    } else if (c.g < 3) {
      v = inconclusive("general-curve-mrc");
      v.notes.push_back("needs g >= 3");
    } else {
      const long long s = 2LL * c.d - 3;
      const Witness w = s < 0 ? Witness::of(Q(s), Q(0), "sign guard 2d - 3 vs 0")
                              : Witness::of(Q(s * s), Q(8LL * c.g + 1), "(2d - 3)^2 vs 8g + 1");
      if (s >= 0 && s * s >= 8LL * c.g + 1) {
        v = positive("general-curve-mrc", hyp, w);
        if (s * s == 8LL * c.g + 1) v.notes.push_back("equality: the bound is sharp for r = 1");
      } else {
        v = inconclusive("general-curve-mrc", w);
        v.hypothesis = "not met: " + hyp;
      }
    }
    v.generic = true;
    v.notes.push_back("generic statement: the general Ulrich bundle of each rank");
    out.push_back(std::move(v));
  }
  return out;
}

NormalityVerdict mrc_check(int g, int d) {
  if (g < 3) throw InputError("mrc_check needs g >= 3, got " + std::to_string(g));
  if (d < 1) throw InputError("degree must be >= 1, got " + std::to_string(d));
  const Q lhs = binomial(Q(d + 1), 2);
  const Q rhs = Q(2 * d + g - 1);
  const Witness w = Witness::of(lhs, rhs, "dim S^2 H0(L) vs h0(2L) = 2d + g - 1");
  const std::string hyp = "C(d+1, 2) >= 2d + g - 1";
  NormalityVerdict v;
  if (lhs >= rhs) {
    v = positive("mrc-dimension-count", hyp, w);
    if (lhs == rhs) v.notes.push_back("equality: the bound is sharp for r = 1");
  } else {
    v = inconclusive("mrc-dimension-count", w);
    v.hypothesis = "not met: " + hyp;
  }
  v.k = 2;
  v.generic = true;
  v.notes.push_back("generic statement: general curve, general polarization, general Ulrich line bundle");
  return v;
}

int kko_genus_threshold(int h) {
  switch (h) {
    case 2: return 15;
    case 3: return 17;
    case 4: return 27;
    case 5: return 33;
    default: throw OutOfRange("g_h is tabulated for h = 2..5, got " + std::to_string(h));
  }
}

std::vector<NormalityVerdict> kko_verdicts(const CurveCase& c) {
  validate(c);
  std::vector<NormalityVerdict> out;
  if (!c.very_ample || c.g < 3 || c.d < 2) return out;
  if (c.d == c.g || c.d == c.g + 1) {
    NormalityVerdict v = positive("kko-line-bundles", "embedded curve, g >= 3, d = g or d = g + 1");
    v.generic = c.r > 1;
    v.notes.push_back(c.r == 1 ? "every Ulrich line bundle is projectively normal"
                               : "generic statement: the general Ulrich bundle of this rank");
    out.push_back(std::move(v));
  }
  for (int h = 2; h <= 5; ++h) {
    if (c.d == c.g - h + 1 && c.g >= kko_genus_threshold(h)) {
      NormalityVerdict v = positive("kko-general-nonspecial", "embedded curve, d = g - " + std::to_string(h - 1) +
                                                                  ", g >= " + std::to_string(kko_genus_threshold(h)),
                                    Witness::of(Q(c.g), Q(kko_genus_threshold(h)), "g vs g_h"));
      v.generic = true;
      v.notes.push_back("generic statement: the general Ulrich bundle of each rank");
      out.push_back(std::move(v));
    }
  }
  return out;
}

const std::vector<KkoTuple>& kko_tuples() {
  static const std::vector<KkoTuple> tuples = {
      {2, 1, 3, 6}, {2, 1, 4, 4},
      {3, 1, 3, 8}, {3, 1, 4, 3}, {3, 1, 5, 4},
      {4, 1, 3, 10}, {4, 1, 4, 6}, {4, 1, 5, 3}, {4, 1, 6, 4}, {4, 2, 8, 6},
      {5, 1, 3, 12}, {5, 1, 4, 5}, {5, 1, 5, 2}, {5, 1, 6, 3}, {5, 1, 7, 4}, {5, 2, 8, 5}, {5, 2, 9, 6},
  };
  return tuples;
}

std::vector<KkoRow> kko_audit() {
  std::vector<KkoRow> rows;
  for (const KkoTuple& t : kko_tuples()) {
    KkoRow row;
    row.tuple = t;
    row.g_h = kko_genus_threshold(t.h);
    const int num = t.b + t.h - 2;
    row.c = num % t.a == 0 ? num / t.a : 0;
    row.dimension_bound = t.a - 2 * t.j - 1 + t.b;
    row.bound_ok = row.dimension_bound < row.g_h;
    row.shape_ok = row.c >= 1 && row.c <= 5 && t.a >= 2 * t.j && t.a >= 3 && t.a <= 9 && t.b >= 2 && t.b <= 12;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ulrichnorm::normality
