#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ulrichnorm/normality/curve.hpp"
#include "ulrichnorm/report/report.hpp"
#include "ulrichnorm/rr/variety.hpp"

namespace ulrichnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitVerificationFailure = 3;

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// $ULRICHNORM_SEED, else 7. Throws InputError on a malformed value.
std::uint64_t default_seed();

struct RankRange {
  int lo = 1;
  int hi = 6;
};

/// "3" or "1..6", with 1 <= lo <= hi <= 12.
RankRange parse_ranks(const std::string& text);

/// Linear combination of H and K such as "3H", "3H-1/2K", "-K"; a bare
/// number n stands for nH.
GradedClass parse_divisor(const VarietyModel& v, const std::string& text);

struct Verification {
  report::ScanReport report;
  bool ok = true;
};

Verification verify_formulas(RankRange ranks, int trials, std::uint64_t seed);

report::CaseReport check_curve(const normality::CurveCase& c);
report::CaseReport check_surface_hyp(int degree, int rank);
report::CaseReport check_threefold_hyp(int degree, int rank);

struct SurfaceInput {
  VarietyModel variety;
  int rank = 2;
  std::string c1;
  Rational c2;
  /// Defaults to r H^2.
  std::optional<int> h0;
};

report::CaseReport check_surface(const SurfaceInput& in);

report::ScanReport scan_ci(int r_max, int d_max = 60);
report::ScanReport scan_p3(int d_max, int r_max);
report::ScanReport scan_p4(int d_max, int r_max);
report::ScanReport scan_curve(int g_max, int d_max, int rank = 1);
report::ScanReport kko_audit_report();

}  // namespace ulrichnorm::cli
