// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ulrichnorm/chern/chern.hpp"
#include "ulrichnorm/cli/cli.hpp"
#include "ulrichnorm/error.hpp"
#include "ulrichnorm/exactalg/splitting_oracle.hpp"
#include "ulrichnorm/normality/counting.hpp"
#include "ulrichnorm/normality/curve.hpp"
#include "ulrichnorm/normality/surface.hpp"
#include "ulrichnorm/report/presets.hpp"
#include "ulrichnorm/rr/riemann_roch.hpp"
#include "ulrichnorm/ulrich/ulrich.hpp"

using namespace ulrichnorm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

bool parity_ok(int d, int r) { return (r * (d - 1)) % 2 == 0; }

std::string s(const Rational& q) { return q.to_string(); }

Rational chi_twist(const VarietyModel& v, const ChernVector& e, int p) {
  return rr::chi(v, chern::twist(e, v.hyperplane() * Rational(-p)));
}

Outcome closed_forms() {
  Outcome o;
  const std::uint64_t seed = cli::default_seed();
  int checks = 0;
  for (int r = 1; r <= 6; ++r) {
    for (Construction c : all_constructions()) {
      const OracleResult res = run_splitting_oracle(c, r, chern::closed_form(c), 20, seed);
      o.expect(res.ok && res.trials == 20, to_string(c) + " at r = " + std::to_string(r));
      ++checks;
    }
    for (int k = 1; k <= 6; ++k) {
      o.expect(sym_k_c1_oracle(r, k, chern::sym_k_c1_scalar, 20, seed),
               "c1(S^" + std::to_string(k) + "E) at r = " + std::to_string(r));
      ++checks;
    }
  }
  o.detail = std::to_string(checks) + " oracle runs x 20 trials, seed " + std::to_string(seed);
  return o;
}

Outcome whitney() {
  Outcome o;
  const std::uint64_t seed = cli::default_seed();
  int samples = 0;
  for (int r = 1; r <= 6; ++r) {
    RootSampler sampler(seed);
    for (int t = 0; t < 20; ++t) {
      const std::vector<Rational> roots = sampler.next(r);
      const Rational zero(0);
      // Root level: elementary symmetric functions of the derived roots.
      const auto tens = elementary_symmetric(derived_roots(Construction::TensorSquare, roots, zero), 3);
      const auto sym = elementary_symmetric(derived_roots(Construction::Sym2, roots, zero), 3);
      const auto wedge = elementary_symmetric(derived_roots(Construction::Wedge2, roots, zero), 3);
      // Class level: the closed forms, through the Chern class ring.
      const ChernVector e = chern::from_scalar(split_chern(roots));
      const ChernVector ct = chern::tensor_square(e);
      const ChernVector cs = chern::sym2(e);
      const ChernVector cw = chern::wedge2(e);
      auto ck = [](const ChernVector& v, int k) {
        switch (k) {
          case 0: return GradedClass::one(v.ring());
          case 1: return v.c1();
          case 2: return v.c2();
          default: return v.c3();
        }
      };
      for (int k = 0; k <= 3; ++k) {
        Rational root_sum(0);
        GradedClass class_sum = GradedClass::zero(e.ring());
        for (int i = 0; i <= k; ++i) {
          root_sum += sym[i] * wedge[k - i];
          class_sum += ck(cs, i) * ck(cw, k - i);
        }
        o.expect(tens[k] == root_sum, "roots, r = " + std::to_string(r) + ", k = " + std::to_string(k));
        o.expect(ck(ct, k) == class_sum, "classes, r = " + std::to_string(r) + ", k = " + std::to_string(k));
      }
      ++samples;
    }
  }
  o.detail = std::to_string(samples) + " split samples, k = 0..3, roots and closed forms";
  return o;
}

Outcome solver() {
  Outcome o;
  int surfaces = 0, threefolds = 0, rejected = 0;
  for (int d = 2; d <= 10; ++d) {
    const VarietyModel v = VarietyModel::hypersurface_p3(d);
    for (int r = 1; r <= 6; ++r) {
      if (!parity_ok(d, r)) continue;
      const std::string at = "d = " + std::to_string(d) + ", r = " + std::to_string(r);
      if (r == 1) {
        bool threw = false;
        try {
          (void)rr::solve_ulrich_chern(v, r);
        } catch (const InconsistentData&) {
          threw = true;
        }
        o.expect(threw, "rank 1 rejected on surface " + at);
        rejected += threw ? 1 : 0;
        continue;
      }
      const ChernVector e = rr::solve_ulrich_chern(v, r);
      const Rational c2 = integrate(e.c2());
      const Rational c1sq = intersect(e.c1(), e.c1());
      const Rational c1k = intersect(e.c1(), v.canonical());
      o.expect(c2 == ulrich::casnati_c2(r, v.degree(), v.chi_structure_sheaf(), c1sq, c1k), "Casnati c2 " + at);
      const Rational D(d), R(r);
      o.expect(c2 == D * R * (D - 1) * (Rational(3) * D * R - Rational(2) * D - Rational(3) * R + Rational(4)) / Rational(24),
               "closed c2 " + at);
      o.expect(chi_twist(v, e, 1) == Rational(0) && chi_twist(v, e, 2) == Rational(0), "vanishing " + at);
      ++surfaces;
    }
  }
  for (int d = 2; d <= 8; ++d) {
    const VarietyModel v = VarietyModel::hypersurface_p4(d);
    for (int r = 1; r <= 6; ++r) {
      if (!parity_ok(d, r)) continue;
      const std::string at = "d = " + std::to_string(d) + ", r = " + std::to_string(r);
      if (r == 1) {
        bool threw = false;
        try {
          (void)rr::solve_ulrich_chern(v, r);
        } catch (const InconsistentData&) {
          threw = true;
        }
        o.expect(threw, "rank 1 rejected on threefold " + at);
        rejected += threw ? 1 : 0;
        continue;
      }
      const ChernVector e = rr::solve_ulrich_chern(v, r);
      const Rational D(d), R(r);
      // (d-1)^2 (r-2)(rd-r+2) as a multiple of r H^3 / 48.
      const Rational expected = R * D * (D - 1) * (D - 1) * (R - 2) * (R * D - R + 2) / Rational(48);
      o.expect(integrate(e.c3()) == expected, "c3 " + at);
      ++threefolds;
    }
  }
  o.detail = std::to_string(surfaces) + " surfaces (2 <= d <= 10), " + std::to_string(threefolds) +
             " threefolds (2 <= d <= 8), r = 2..6; rank 1 rejected in " + std::to_string(rejected) + " cases";
  return o;
}

Outcome dual_path() {
  Outcome o;
  int cases = 0, specialized = 0;
  for (int d = 2; d <= 10; ++d) {
    const VarietyModel v = VarietyModel::hypersurface_p3(d);
    for (int r = 2; r <= 6; ++r) {
      if (!parity_ok(d, r)) continue;
      const std::string at = "d = " + std::to_string(d) + ", r = " + std::to_string(r);
      const ulrich::UlrichData u = ulrich::make_ulrich(v, r);
      const ChernVector& e = u.chern;
      const Rational c1sq = intersect(e.c1(), e.c1());
      const Rational c1k = intersect(e.c1(), v.canonical());
      const ulrich::PowerCounts closed =
          ulrich::h0_powers_from_invariants(r, v.degree(), v.chi_structure_sheaf(), c1sq, c1k);
      const ulrich::PowerCounts hrr{rr::chi(v, chern::tensor_square(e)), rr::chi(v, chern::sym2(e)),
                                    rr::chi(v, chern::sym3(e))};
      o.expect(closed == hrr, "closed vs Riemann-Roch " + at);
      o.expect(closed == ulrich::h0_powers_p3_hypersurface(d, r), "P^3 closed forms " + at);
      const bool canonical_c1 = numerically_equal_divisors(e.c1(), rr::ulrich_c1(v, r));
      o.expect(canonical_c1, "c1 = (r/2)(K+3H) " + at);
      if (canonical_c1) {
        const ulrich::PowerCounts canonical = ulrich::h0_powers_canonical(
            r, v.degree(), v.chi_structure_sheaf(), intersect(v.canonical(), v.canonical()),
            intersect(v.canonical(), v.hyperplane()));
        o.expect(canonical == closed, "specialization " + at);
        ++specialized;
      }
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " cases, canonical-c1 specialization in " + std::to_string(specialized);
  return o;
}

Outcome p3_classifier() {
  Outcome o;
  int cells = 0;
  for (int d = 2; d <= 12; ++d) {
    for (int r = 1; r <= 12; ++r) {
      if (!parity_ok(d, r)) continue;
      const std::string at = "d = " + std::to_string(d) + ", r = " + std::to_string(r);
      const normality::P3Classification c = normality::classify_p3_hypersurface(d, r);
      const bool allowed = d == 2 || (d == 3 && r >= 3) || (d == 4 && r >= 6);
      o.expect((c.two_normal.label() == "NotKNormal(2)") == !allowed, "2-normal verdict " + at);
      o.expect(c.allowed == allowed, "allowed flag " + at);
      if (r == 2) o.expect(c.slack3 == Rational(0), "slack3 = 0 " + at);
      if (r >= 3) o.expect(c.slack3 > Rational(0), "slack3 > 0 " + at);
      ++cells;
    }
  }
  o.detail = std::to_string(cells) + " cells, 2 <= d <= 12, 1 <= r <= 12";
  return o;
}

Outcome p4_classifier() {
  Outcome o;
  int cells = 0;
  for (int d = 4; d <= 20; ++d) {
    for (int r = 1; r <= 12; ++r) {
      if (!parity_ok(d, r)) continue;
      const std::string at = "d = " + std::to_string(d) + ", r = " + std::to_string(r);
      const normality::P4Classification c = normality::classify_p4_hypersurface(d, r);
      const Rational h0(r * d);
      o.expect(c.counts.chi_tensor2 > h0 * h0, "chi(E(x)E) > (rd)^2 " + at);
      o.expect((c.two_normal.label() == "NotKNormal(2)") == (3 * r > d + 4), "threshold " + at);
      ++cells;
    }
  }
  const normality::P4Classification b = normality::classify_p4_hypersurface(5, 3);
  const bool boundary = b.two_normal.status == VerdictStatus::Inconclusive && b.two_normal.witness &&
                        b.two_normal.witness->lhs == Rational(120) && b.two_normal.witness->rhs == Rational(120) &&
                        b.two_normal.witness->relation == Relation::Equal;
  o.expect(boundary, "boundary (5, 3)");
  o.detail = std::to_string(cells) + " cells, 4 <= d <= 20, 1 <= r <= 12; (5, 3): " +
             (b.two_normal.witness ? s(b.two_normal.witness->lhs) + " " + to_string(b.two_normal.witness->relation) +
                                         " " + s(b.two_normal.witness->rhs)
                                   : std::string("no witness")) +
             ", " + b.two_normal.label();
  return o;
}

Outcome k3_example() {
  Outcome o;
  const report::Preset& preset = report::PresetBook::defaults().get("quartic-k3");
  const int d = preset.model().hypersurface_degree();
  std::string found;
  for (int r : {2, 4}) {
    const report::CaseReport rep = cli::check_surface_hyp(d, r);
    const NormalityVerdict* v = nullptr;
    for (const auto& [name, verdict] : rep.verdicts) {
      if (name == "2-normal") v = &verdict;
    }
    o.expect(v != nullptr && v->witness, "2-normal verdict present at r = " + std::to_string(r));
    if (!v || !v->witness) continue;
    const Rational lhs = v->witness->lhs, rhs = v->witness->rhs;
    found += (found.empty() ? "" : "; ") + std::string("r = ") + std::to_string(r) + ": " + s(lhs) + " " +
             to_string(v->witness->relation) + " " + s(rhs);
    o.expect(v->status == VerdictStatus::NotKNormal, "NotKNormal at r = " + std::to_string(r));
    const Rational h0(r * d);
    o.expect(lhs == h0 * (h0 + 1) / Rational(2), "dim S^2 H0 at r = " + std::to_string(r));
    o.expect(rhs == ulrich::h0_powers_via_hrr(ulrich::make_ulrich(preset.model(), r)).sym2,
             "h0(S^2E) by Riemann-Roch at r = " + std::to_string(r));
    if (r == 2) o.expect(lhs == Rational(36) && rhs == Rational(40), "36 < 40");
    if (r == 4) o.expect(lhs == Rational(136) && rhs == Rational(140), "136 < 140");
  }
  const VarietyModel k3 = preset.model();
  const normality::AcmResult acm = normality::surface_acm_criterion(k3, rr::solve_ulrich_chern(k3, 2), 8);
  o.expect(acm.data.h1_lower == Rational(17), "h1 bound from the inequality");
  o.expect(acm.data.h1_lower_rr == Rational(17), "h1 bound from Riemann-Roch on C");
  o.expect(acm.verdict.status == VerdictStatus::NotKNormal, "aCM criterion fires");
  o.detail = found + "; h1(C, Z) >= " + s(acm.data.h1_lower) + " and " + s(acm.data.h1_lower_rr);
  return o;
}

Outcome ci_scan() {
  Outcome o;
  const report::ScanReport rep = cli::scan_ci(50);
  const std::vector<std::string> bullets = {
      "6 <= d <= 18 if r >= 2", "d = 20, 22 if r >= 3", "d = 24 if r >= 5", "d = 26 if r >= 8", "d = 28 if r >= 41",
  };
  o.expect(rep.summary.size() >= 6, "summary length");
  if (rep.summary.size() >= 6) {
    o.expect(std::vector<std::string>(rep.summary.begin(), rep.summary.begin() + 5) == bullets, "five bullets");
    o.expect(rep.summary[5] == "d <= 28 (a <= 14)", "global bound");
  }
  for (const report::ScanRow& row : rep.rows) {
    if (row.params[1] >= 30) o.expect(row.values.back() == "false", "feasible beyond 28");
  }
  o.detail = std::to_string(rep.rows.size()) + " rows, r <= 50, d <= 60";
  return o;
}

Outcome curves() {
  Outcome o;
  const auto vs = normality::curve_thresholds(normality::CurveCase{3, 4, 1, true, true, true, std::nullopt, {}});
  bool found = false;
  for (const NormalityVerdict& v : vs) {
    if (v.tag != "general-curve-mrc") continue;
    found = true;
    o.expect(v.status == VerdictStatus::PositiveByTheorem && v.generic, "general-curve verdict fires");
    o.expect(v.witness && v.witness->lhs == Rational(25) && v.witness->rhs == Rational(25) &&
                 v.witness->relation == Relation::Equal,
             "(2d-3)^2 = 8g+1 = 25");
  }
  o.expect(found, "general-curve verdict present");
  const NormalityVerdict m = normality::mrc_check(3, 4);
  o.expect(m.fired() && m.witness && m.witness->lhs == Rational(10) && m.witness->rhs == Rational(10), "10 = 10");

  long long pairs = 0;
  for (int g = 0; g <= 30; ++g) {
    for (int cliff : {-1, 0, 1, 2}) {
      for (int flags = 0; flags < 4; ++flags) {
        std::vector<NormalityVerdict> prev;
        for (int d = 1; d <= 60; ++d) {
          normality::CurveCase c{g, d, 2, (flags & 1) != 0, (flags & 2) != 0, (flags & 2) != 0,
                                 cliff < 0 ? std::nullopt : std::optional<int>(cliff), {2, 3, 4, 5}};
          auto cur = normality::curve_thresholds(c);
          if (g >= 3) cur.push_back(normality::mrc_check(g, d));
          if (!prev.empty()) {
            o.expect(prev.size() == cur.size(), "verdict list shape");
            for (std::size_t i = 0; i < prev.size() && i < cur.size(); ++i) {
              o.expect(!prev[i].fired() || cur[i].fired(),
                       prev[i].tag + " at g = " + std::to_string(g) + ", d = " + std::to_string(d - 1));
              ++pairs;
            }
          }
          prev = std::move(cur);
        }
      }
    }
  }
  o.detail = "(3, 4): 25 = 25 and 10 = 10; " + std::to_string(pairs) + " monotonicity pairs over g <= 30, d <= 60";
  return o;
}

Outcome kko() {
  Outcome o;
  const std::vector<std::pair<int, std::vector<std::array<int, 3>>>> expected = {
      {2, {{1, 3, 6}, {1, 4, 4}}},
      {3, {{1, 3, 8}, {1, 4, 3}, {1, 5, 4}}},
      {4, {{1, 3, 10}, {1, 4, 6}, {1, 5, 3}, {1, 6, 4}, {2, 8, 6}}},
      {5, {{1, 3, 12}, {1, 4, 5}, {1, 5, 2}, {1, 6, 3}, {1, 7, 4}, {2, 8, 5}, {2, 9, 6}}},
  };
  const std::array<int, 4> gh = {15, 17, 27, 33};
  std::vector<normality::KkoTuple> flat;
  for (const auto& [h, list] : expected) {
    for (const auto& t : list) flat.push_back({h, t[0], t[1], t[2]});
  }
  o.expect(normality::kko_tuples() == flat, "stored tuples match the lists item for item");
  const auto rows = normality::kko_audit();
  for (const normality::KkoRow& row : rows) {
    const auto& t = row.tuple;
    const std::string at = "(" + std::to_string(t.h) + ", " + std::to_string(t.j) + ", " + std::to_string(t.a) + ", " +
                           std::to_string(t.b) + ")";
    o.expect(row.g_h == gh[t.h - 2], "g_h " + at);
    o.expect(row.dimension_bound == t.a - 2 * t.j - 1 + t.b, "bound " + at);
    o.expect(row.dimension_bound < row.g_h && row.bound_ok, "a - 2j - 1 + b < g_h " + at);
    o.expect(row.shape_ok, "shape " + at);
  }
  o.detail = std::to_string(rows.size()) + " tuples, g_h = (15, 17, 27, 33)";
  return o;
}

struct Captured {
  int code = -1;
  std::string out;
};

Captured capture(const std::string& args) {
  const std::string cmd = std::string(ULRICHNORM_CLI_PATH) + " " + args;
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 1 << 14> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "verify-formulas --ranks 1..6 --trials 20 --seed 7",
      "scan ci --rmax 50",
      "scan p3 --dmax 12 --rmax 12",
      "scan p4 --dmax 12 --rmax 12",
      "scan curve --gmax 30 --dmax 60",
  };
  std::size_t bytes = 0;
  int runs = 0;
  for (const std::string& cmd : commands) {
    for (const char* fmt : {"table", "json", "csv"}) {
      const std::string full = cmd + " --format " + fmt;
      const Captured a = capture(full);
      const Captured b = capture(full);
      o.expect(a.code == 0 && b.code == 0, "exit 0: " + full);
      o.expect(!a.out.empty() && a.out == b.out, "identical output: " + full);
      bytes += a.out.size();
      runs += 2;
    }
  }
  o.detail = std::to_string(runs) + " runs, " + std::to_string(bytes) + " bytes compared per side";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed forms match the splitting-principle oracle", closed_forms},
      {"Whitney reconstruction of E(x)E", whitney},
      {"Ulrich Chern solver: Casnati c2 and threefold c3", solver},
      {"dual-path section counts", dual_path},
      {"P^3 classifier", p3_classifier},
      {"P^4 classifier", p4_classifier},
      {"quartic K3 example", k3_example},
      {"complete-intersection scan", ci_scan},
      {"curve thresholds", curves},
      {"kko audit", kko},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
    std::cout << "\n";
    for (const std::string& f : o.failures) std::cout << "        mismatch: " << f << "\n";
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
