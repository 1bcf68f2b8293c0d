#include <algorithm>

#include "ulrichnorm/error.hpp"
#include "ulrichnorm/normality/counting.hpp"
#include "ulrichnorm/rr/riemann_roch.hpp"

namespace ulrichnorm::normality {

namespace {

using Q = Rational;

std::optional<ChernVector> try_solve(const VarietyModel& v, int rank, std::vector<std::string>& notes) {
  try {
    return rr::solve_ulrich_chern(v, rank);
  } catch (const InconsistentData& ex) {
    notes.push_back(std::string("values evaluated formally: ") + ex.what());
    return std::nullopt;
  }
}

std::string join_degrees(const std::vector<int>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ds[i]);
  }
  return out;
}

}  // namespace

NormalityVerdict dimension_test(const Rational& h0, int k, const Rational& lower, bool strong) {
  if (k < 2) throw InputError("dimension test needs k >= 2, got " + std::to_string(k));
  if (!h0.is_integer() || h0.sign() < 0) throw InputError("h0 must be a nonnegative integer, got " + h0.to_string());
  const Q source = strong ? h0.pow(k) : binomial(h0 + Q(k - 1), k);
  const std::string what = strong ? "dim H0(E)^{(x)" + std::to_string(k) + "} vs h0(E^{(x)" + std::to_string(k) + "})"
                                  : "dim S^" + std::to_string(k) + " H0(E) vs h0(S^" + std::to_string(k) + " E)";
  NormalityVerdict v = inconclusive("dimension-count", Witness::of(source, lower, what));
  v.k = k;
  if (source < lower) v.status = strong ? VerdictStatus::NotStronglyKNormal : VerdictStatus::NotKNormal;
  return v;
}

Rational p3_three_normality_slack(int degree, int rank) {
  const Q r(rank);
  const Q d(degree);
  return r * d * (d - Q(1)) * (r - Q(2)) * (d * (Q(7) * r + Q(2)) + r + Q(8)) / Q(72);
}

P3Classification classify_p3_hypersurface(int degree, int rank) {
  P3Classification out;
  out.degree = degree;
  out.rank = rank;
  out.h0 = ulrich::h0_powers_p3_hypersurface(degree, rank);
  out.chern = try_solve(VarietyModel::hypersurface_p3(degree), rank, out.notes);

  const Q h0(rank * degree);
  out.two_normal = dimension_test(h0, 2, out.h0.sym2, false);
  out.strongly_two_normal = dimension_test(h0, 2, out.h0.tensor2, true);
  out.three_normal = dimension_test(h0, 3, out.h0.sym3, false);
  out.two_normal.tag = out.strongly_two_normal.tag = out.three_normal.tag = "p3-hypersurface-count";

  out.slack3 = p3_three_normality_slack(degree, rank);
  if (out.slack3 != binomial(h0 + Q(2), 3) - out.h0.sym3) {
    throw InconsistentData("3-normality slack disagrees with dim S^3 H0 - h0(S^3 E)");
  }
  out.allowed = degree == 2 || (degree == 3 && rank >= 3) || (degree == 4 && rank >= 6);
  if (rank == 1) out.notes.push_back("Pic = ZH forces r >= 2; r = 1 is evaluated formally");
  return out;
}

P4Classification classify_p4_hypersurface(int degree, int rank) {
  P4Classification out;
  out.degree = degree;
  out.rank = rank;
  out.counts = ulrich::chi_powers_p4_hypersurface(degree, rank);
  out.chern = try_solve(VarietyModel::hypersurface_p4(degree), rank, out.notes);

  const Q h0(rank * degree);
  out.strongly_two_normal = dimension_test(h0, 2, out.counts.chi_tensor2, true);
  out.two_normal = dimension_test(h0, 2, out.counts.chi_sym2, false);
  out.strongly_two_normal.tag = out.two_normal.tag = "p4-hypersurface-count";
  for (NormalityVerdict* v : {&out.strongly_two_normal, &out.two_normal}) {
    v->notes.push_back("chi is used as a lower bound for h0 (h2 and h3 of the powers vanish)");
  }
  out.within_hypotheses = degree >= 4;
  out.above_threshold = 3 * rank > degree + 4;
  if (!out.within_hypotheses) out.notes.push_back("outside the theorem hypotheses (d >= 4); raw inequalities only");
  if ((rank == 2 || rank == 3) && degree >= 3) {
    out.notes.push_back("rank 2 and 3 Ulrich bundles on threefold hypersurfaces of degree >= 3 are 2-normal "
                        "(aCM argument, not derived by counting)");
  }
  return out;
}

Rational ci_h0_sym2(int rank, int degree) {
  const Q r(rank);
  const Q d(degree);
  return r * d / Q(96) * (r * d * d + Q(18) * (r + Q(1)) * d + Q(44) * r + Q(36));
}

Rational ci_quadratic(int rank, int degree) {
  const Q r(rank);
  const Q d(degree);
  return r * d * d - (Q(30) * r - Q(18)) * d + Q(44) * r - Q(12);
}

CiScan ci_example_scan(int r_max, int d_max) {
  if (r_max < 2) throw InputError("r_max must be >= 2, got " + std::to_string(r_max));
  if (d_max < 6) throw InputError("d_max must be >= 6, got " + std::to_string(d_max));
  CiScan out;
  out.r_max = r_max;
  out.d_max = d_max;

  // q(r, d) = r A(d) + B(d) with B(d) = 18d - 12 > 0, so for fixed d the
  // feasible ranks form the ray r >= B / (-A) when A < 0 and are empty otherwise.
  for (int d = 6; d <= d_max; d += 2) {
    const long long a = static_cast<long long>(d) * d - 30LL * d + 44;
    const long long b = 18LL * d - 12;
    CiThreshold t{d, std::nullopt};
    if (a < 0) t.min_rank = static_cast<int>(std::max<long long>(2, (b + (-a) - 1) / (-a)));
    out.thresholds.push_back(t);
    if (a >= 0 && d >= 15 && out.never_feasible_from == 0) out.never_feasible_from = d;
  }

  for (int r = 2; r <= r_max; ++r) {
    for (const CiThreshold& t : out.thresholds) {
      CiRow row;
      row.rank = r;
      row.degree = t.degree;
      row.h0_sym2 = ci_h0_sym2(r, t.degree);
      row.dim_sym2 = binomial(Q(r * t.degree + 1), 2);
      row.quadratic = ci_quadratic(r, t.degree);
      row.feasible = row.quadratic.sign() <= 0;
      if (row.h0_sym2 - row.dim_sym2 != Q(r * t.degree, 96) * row.quadratic) {
        throw InconsistentData("complete-intersection quadratic does not match h0(S^2 E) - dim S^2 H0(E)");
      }
      if (row.feasible != (t.min_rank && r >= *t.min_rank)) {
        throw InconsistentData("complete-intersection feasibility disagrees with the rank threshold at d = " +
                               std::to_string(t.degree));
      }
      out.rows.push_back(std::move(row));
    }
  }

  // Group consecutive degrees sharing a threshold reached within the scan.
  std::vector<int> group;
  int group_rank = 0;
  auto flush = [&] {
    if (group.empty()) return;
    const std::string tail = " if r >= " + std::to_string(group_rank);
    if (group.size() >= 3) {
      out.bullets.push_back(std::to_string(group.front()) + " <= d <= " + std::to_string(group.back()) + tail);
    } else {
      out.bullets.push_back("d = " + join_degrees(group) + tail);
    }
    group.clear();
  };
  for (const CiThreshold& t : out.thresholds) {
    if (!t.min_rank || *t.min_rank > r_max) {
      flush();
      continue;
    }
    if (!group.empty() && *t.min_rank != group_rank) flush();
    group_rank = *t.min_rank;
    group.push_back(t.degree);
    out.max_feasible_degree = t.degree;
  }
  flush();
  return out;
}

}  // namespace ulrichnorm::normality
