#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ulrichnorm/exactalg/rational.hpp"

namespace ulrichnorm {

/// Bundle constructions whose Chern classes the oracle can check.
enum class Construction { TensorSquare, Sym2, Sym3, Wedge2, TensorLine };

std::string to_string(Construction c);
/// Throws InputError on unknown names.
Construction construction_from_string(const std::string& name);
const std::vector<Construction>& all_constructions();

inline constexpr std::uint64_t kDefaultOracleSeed = 7;
inline constexpr int kDefaultOracleTrials = 20;

/// Chern data evaluated at a point: c_k stands for the coefficient of a
/// degree-k monomial in formal roots. c3 is empty when a closed form does not
/// provide it.
struct ScalarChern {
  Rational rank;
  Rational c1;
  Rational c2;
  std::optional<Rational> c3;
};

/// Closed form under test: maps the Chern data of E (and a line-bundle root t,
/// used only by TensorLine) to the Chern data of the construction.
using ClosedForm = std::function<ScalarChern(const ScalarChern& e, const Rational& line_root)>;

/// Random rational roots: numerators in [-100, 100], denominators in {1,2,3,5}.
class RootSampler {
 public:
  explicit RootSampler(std::uint64_t seed = kDefaultOracleSeed) : engine_(seed) {}
  Rational next();
  std::vector<Rational> next(int count);

 private:
  std::mt19937_64 engine_;
};

/// e_0..e_upto of a multiset of roots.
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& roots, int upto);

/// Chern roots of the construction applied to a split bundle with roots `roots`
/// (and line root t for TensorLine).
std::vector<Rational> derived_roots(Construction c, const std::vector<Rational>& roots, const Rational& t);

/// Roots of S^k of a split bundle.
std::vector<Rational> symmetric_power_roots(const std::vector<Rational>& roots, int k);

/// Scalar Chern data of a split bundle: (size, e1, e2, e3).
ScalarChern split_chern(const std::vector<Rational>& roots);

struct OracleMismatch {
  int trial = 0;
  std::vector<Rational> roots;
  Rational line_root;
  ScalarChern expected;
  ScalarChern actual;
};

struct OracleResult {
  bool ok = true;
  int trials = 0;
  std::optional<OracleMismatch> first_mismatch;
};

/// Randomized splitting-principle test of `closed_form` for `construction` at
/// rank r. Throws InputError if r < 1 or trials < 1.
OracleResult run_splitting_oracle(Construction construction, int rank, const ClosedForm& closed_form, int trials,
                                  std::uint64_t seed = kDefaultOracleSeed);

/// True iff the closed form agrees exactly on every trial.
bool splitting_oracle(Construction construction, int rank, const ClosedForm& closed_form,
                      int trials = kDefaultOracleTrials, std::uint64_t seed = kDefaultOracleSeed);

/// c1(S^k E) check: `c1_of_sym_k(e, k)` against e1 of the S^k roots.
bool sym_k_c1_oracle(int rank, int k, const std::function<Rational(const ScalarChern&, int)>& c1_of_sym_k,
                     int trials = kDefaultOracleTrials, std::uint64_t seed = kDefaultOracleSeed);

}  // namespace ulrichnorm
