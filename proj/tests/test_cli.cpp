#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "ulrichnorm/cli/cli.hpp"
#include "ulrichnorm/error.hpp"

using namespace ulrichnorm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_binary(const std::string& args) {
  const std::string cmd = std::string(ULRICHNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST_CASE("surface-hyp JSON report") {
  const Result r = run({"check", "surface-hyp", "--d", "4", "--r", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = report::Json::parse(r.out);
  CHECK(j["verdicts"]["2-normal"]["label"] == "NotKNormal(2)");
  CHECK(j["verdicts"]["2-normal"]["witness"]["lhs"] == "36");
  CHECK(j["verdicts"]["2-normal"]["witness"]["rhs"] == "40");
  CHECK(j["invariants"]["c2"] == "14");
  CHECK(j["invariants"]["h1(C, Z) lower bound"] == "17");

  const Result p = run({"check", "surface-hyp", "--preset", "quartic-k3", "--r", "2", "--format", "json"});
  CHECK(p.out == r.out);
  const Result four = run({"check", "surface-hyp", "--preset", "quartic-k3", "--r", "4", "--format", "json"});
  CHECK(report::Json::parse(four.out)["verdicts"]["2-normal"]["witness"]["lhs"] == "136");
}

TEST_CASE("input errors exit with code 2") {
  const Result parity = run({"check", "surface-hyp", "--d", "4", "--r", "3"});
  CHECK(parity.code == 2);
  CHECK(parity.err.find("r(d-1) must be even") != std::string::npos);
  CHECK(parity.out.empty());

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--d", "4", "--r", "2", "--bogus"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--d", "four", "--r", "2"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--r", "2"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--d", "4", "--preset", "quartic-k3", "--r", "2"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--preset", "quintic-threefold", "--r", "2"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--preset", "no-such", "--r", "2"}).code == 2);
  CHECK(run({"check", "surface-hyp", "--d", "4", "--r", "2", "--format", "xml"}).code == 2);
  CHECK(run({"check", "curve", "--g", "-1", "--d", "3"}).code == 2);
  CHECK(run({"scan", "ci", "--rmax", "1"}).code == 2);
  CHECK(run({"verify-formulas", "--ranks", "0..3"}).code == 2);
  CHECK(run({"verify-formulas", "--ranks", "3..1"}).code == 2);
  CHECK(run({"verify-formulas", "--trials", "0"}).code == 2);
  CHECK(run({"check", "surface", "--preset", "k3-lattice", "--r", "2", "--c1", "3Q", "--c2", "14"}).code == 2);

  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-formulas") != std::string::npos);
  CHECK(run({"check", "surface", "--help"}).code == 0);
}

TEST_CASE("verify-formulas") {
  const Result r = run({"verify-formulas", "--ranks", "1..4", "--trials", "5", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("seed 3, 5 trials per rank, ranks 1..4") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const cli::Verification v = cli::verify_formulas({2, 2}, 3, 9);
  CHECK(v.ok);
  REQUIRE(v.report.rows.size() == 1);
  for (const std::string& value : v.report.rows[0].values) CHECK(value == "ok");
}

TEST_CASE("seed environment variable") {
  ::setenv("ULRICHNORM_SEED", "11", 1);
  CHECK(cli::default_seed() == 11);
  CHECK(run({"verify-formulas", "--ranks", "2", "--trials", "2"}).out.find("seed 11,") != std::string::npos);
  ::setenv("ULRICHNORM_SEED", "eleven", 1);
  CHECK_THROWS_AS((void)cli::default_seed(), InputError);
  CHECK(run({"verify-formulas", "--ranks", "2", "--trials", "2"}).code == 2);
  CHECK(run({"verify-formulas", "--ranks", "2", "--trials", "2", "--seed", "5"}).code == 0);
  ::unsetenv("ULRICHNORM_SEED");
  CHECK(cli::default_seed() == 7);
}

TEST_CASE("divisor parsing") {
  const VarietyModel s = VarietyModel::surface(ClassRing::surface_hk(4, 2, 1), Rational(1), 0);
  const GradedClass h = s.hyperplane();
  const GradedClass k = s.canonical();
  CHECK(cli::parse_divisor(s, "3H") == h * Rational(3));
  CHECK(cli::parse_divisor(s, "3") == h * Rational(3));
  CHECK(cli::parse_divisor(s, "-1/2") == h * Rational(-1, 2));
  CHECK(cli::parse_divisor(s, "3H-1/2K") == h * Rational(3) - k * Rational(1, 2));
  CHECK(cli::parse_divisor(s, " H + K ") == h + k);
  CHECK(cli::parse_divisor(s, "-K+2*H") == h * Rational(2) - k);
  CHECK_THROWS_AS((void)cli::parse_divisor(s, ""), InputError);
  CHECK_THROWS_AS((void)cli::parse_divisor(s, "3H-1"), InputError);
  CHECK_THROWS_AS((void)cli::parse_divisor(s, "xH"), InputError);
  CHECK_THROWS_AS((void)cli::parse_divisor(s, "3HK"), InputError);

  const VarietyModel quintic = VarietyModel::hypersurface_p3(5);
  CHECK(cli::parse_divisor(quintic, "K+H") == quintic.hyperplane() * Rational(2));
}

TEST_CASE("check surface") {
  const Result lattice = run({"check", "surface", "--h2", "4", "--hk", "0", "--k2", "0", "--chi", "2", "--r", "2", "--c1",
                              "3H", "--c2", "14", "--format", "json"});
  REQUIRE(lattice.code == 0);
  const auto j = report::Json::parse(lattice.out);
  CHECK(j["verdicts"]["degeneracy"]["label"] == "NotKNormal(2)");
  CHECK(j["verdicts"]["degeneracy"]["witness"]["lhs"] == "168");
  CHECK(j["verdicts"]["degeneracy"]["witness"]["rhs"] == "134");
  CHECK(j["invariants"]["h0(E)"] == "8");
  CHECK(j["invariants"]["deg P(E)"] == "22");

  const Result preset =
      run({"check", "surface", "--preset", "k3-lattice", "--r", "2", "--c1", "3H", "--c2", "14", "--format", "json"});
  CHECK(preset.out == lattice.out);

  const Result k3 =
      run({"check", "surface", "--preset", "quartic-k3", "--r", "2", "--c1", "3", "--c2", "14", "--format", "json"});
  CHECK(report::Json::parse(k3.out)["verdicts"]["degeneracy"]["witness"]["lhs"] == "168");

  const Result small = run({"check", "surface", "--preset", "k3-lattice", "--r", "2", "--c1", "3H", "--c2", "14", "--h", "4"});
  CHECK(small.code == 0);
  CHECK(small.out.find("skipped") != std::string::npos);

  CHECK(run({"check", "surface", "--h2", "4", "--r", "2", "--c1", "3H", "--c2", "14"}).code == 2);
  CHECK(run({"check", "surface", "--h2", "4", "--preset", "k3-lattice", "--r", "2", "--c1", "3H", "--c2", "14"}).code == 2);
}

TEST_CASE("curve and threefold checks") {
  const Result c = run({"check", "curve", "--g", "3", "--d", "4", "--general", "--very-ample", "--format", "json"});
  REQUIRE(c.code == 0);
  const auto j = report::Json::parse(c.out);
  CHECK(j["verdicts"]["general-curve-mrc"]["label"] == "PositiveByTheorem(general-curve-mrc)");
  CHECK(j["verdicts"]["general-curve-mrc"]["witness"]["lhs"] == "25");
  CHECK(j["verdicts"]["general-curve-mrc"]["generic"] == true);
  CHECK(j["verdicts"]["mrc-dimension-count"]["witness"]["lhs"] == "10");

  const Result np = run({"check", "curve", "--g", "0", "--d", "3", "--p", "2", "--p", "3", "--format", "json"});
  const auto jn = report::Json::parse(np.out);
  CHECK(jn["verdicts"].contains("curve-N2"));
  CHECK(jn["verdicts"].contains("curve-N3"));
  CHECK_FALSE(jn["verdicts"].contains("mrc-dimension-count"));

  const Result t = run({"check", "threefold-hyp", "--d", "5", "--r", "3", "--format", "json"});
  REQUIRE(t.code == 0);
  const auto jt = report::Json::parse(t.out);
  CHECK(jt["verdicts"]["2-normal"]["label"] == "Inconclusive");
  CHECK(jt["verdicts"]["2-normal"]["witness"]["lhs"] == "120");
  CHECK(jt["verdicts"]["2-normal"]["witness"]["relation"] == "=");
  CHECK(run({"check", "threefold-hyp", "--preset", "quintic-threefold", "--r", "3", "--format", "json"}).out == t.out);
}

TEST_CASE("scans and audit") {
  const Result ci = run({"scan", "ci", "--rmax", "50", "--format", "json"});
  REQUIRE(ci.code == 0);
  const auto j = report::Json::parse(ci.out);
  const std::vector<std::string> summary = j["summary"];
  REQUIRE(summary.size() == 7);
  CHECK(summary[0] == "6 <= d <= 18 if r >= 2");
  CHECK(summary[4] == "d = 28 if r >= 41");
  CHECK(summary[5] == "d <= 28 (a <= 14)");

  CHECK(run({"scan", "p3", "--dmax", "6", "--rmax", "4"}).out.find(": holds") != std::string::npos);
  CHECK(run({"scan", "p4", "--dmax", "8", "--rmax", "6"}).out.find("FAILS") == std::string::npos);
  CHECK(run({"scan", "curve", "--gmax", "5", "--dmax", "12", "--format", "csv"}).out.find("g,d,curve-degree") == 0);
  const Result kko = run({"kko-audit"});
  CHECK(kko.code == 0);
  CHECK(kko.out.find("17 tuples") != std::string::npos);
  CHECK(run({"presets"}).out.find("quartic-k3") != std::string::npos);
}

TEST_CASE("binary matches the in-process entry point") {
  const Result bin = run_binary("check surface-hyp --d 4 --r 2 --format json");
  CHECK(bin.code == 0);
  CHECK(bin.out == run({"check", "surface-hyp", "--d", "4", "--r", "2", "--format", "json"}).out);
  CHECK(run_binary("check surface-hyp --d 4 --r 3").code == 2);
  CHECK(run_binary("--help").code == 0);

  const Result a = run_binary("scan p3 --dmax 8 --rmax 6 --format csv");
  const Result b = run_binary("scan p3 --dmax 8 --rmax 6 --format csv");
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
