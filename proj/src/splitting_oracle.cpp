#include "ulrichnorm/exactalg/splitting_oracle.hpp"

#include <array>

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::TensorSquare: return "TensorSquare";
    case Construction::Sym2: return "Sym2";
    case Construction::Sym3: return "Sym3";
    case Construction::Wedge2: return "Wedge2";
    case Construction::TensorLine: return "TensorLine";
  }
  return "?";
}

Construction construction_from_string(const std::string& name) {
  for (Construction c : all_constructions()) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unsupported construction: " + name);
}

const std::vector<Construction>& all_constructions() {
  static const std::vector<Construction> all = {Construction::TensorSquare, Construction::Sym2, Construction::Sym3,
                                                Construction::Wedge2, Construction::TensorLine};
  return all;
}

Rational RootSampler::next() {
  static constexpr std::array<long, 4> kDenominators = {1, 2, 3, 5};
  // Modulo reduction keeps the stream identical across standard libraries.
  const auto num = static_cast<long>(engine_() % 201) - 100;
  const long den = kDenominators[engine_() % kDenominators.size()];
  return Rational(num, den);
}

std::vector<Rational> RootSampler::next(int count) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& roots, int upto) {
  std::vector<Rational> e(static_cast<std::size_t>(upto) + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& x : roots) {
    for (int k = upto; k >= 1; --k) e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k) - 1];
  }
  return e;
}

namespace {

void multisets(const std::vector<Rational>& roots, int k, std::size_t start, Rational partial,
               std::vector<Rational>& out) {
  if (k == 0) {
    out.push_back(std::move(partial));
    return;
  }
  for (std::size_t i = start; i < roots.size(); ++i) multisets(roots, k - 1, i, partial + roots[i], out);
}

}  // namespace

std::vector<Rational> symmetric_power_roots(const std::vector<Rational>& roots, int k) {
  std::vector<Rational> out;
  multisets(roots, k, 0, Rational(0), out);
  return out;
}

std::vector<Rational> derived_roots(Construction c, const std::vector<Rational>& x, const Rational& t) {
  std::vector<Rational> out;
  const std::size_t r = x.size();
  switch (c) {
    case Construction::TensorSquare:
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) out.push_back(x[i] + x[j]);
      }
      break;
    case Construction::Sym2:
      return symmetric_power_roots(x, 2);
    case Construction::Sym3:
      return symmetric_power_roots(x, 3);
    case Construction::Wedge2:
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) out.push_back(x[i] + x[j]);
      }
      break;
    case Construction::TensorLine:
      for (const auto& xi : x) out.push_back(xi + t);
      break;
  }
  return out;
}

ScalarChern split_chern(const std::vector<Rational>& roots) {
  const auto e = elementary_symmetric(roots, 3);
  return ScalarChern{Rational(static_cast<long>(roots.size())), e[1], e[2], e[3]};
}

OracleResult run_splitting_oracle(Construction construction, int rank, const ClosedForm& closed_form, int trials,
                                  std::uint64_t seed) {
  if (rank < 1) throw InputError("splitting oracle needs rank >= 1");
  if (trials < 1) throw InputError("splitting oracle needs at least one trial");
  RootSampler sampler(seed);
  OracleResult result;
  for (int trial = 0; trial < trials; ++trial) {
    const auto roots = sampler.next(rank);
    const Rational t = sampler.next();
    const ScalarChern expected = split_chern(derived_roots(construction, roots, t));
    const ScalarChern actual = closed_form(split_chern(roots), t);
    bool same = expected.rank == actual.rank && expected.c1 == actual.c1 && expected.c2 == actual.c2;
    if (actual.c3 && *actual.c3 != *expected.c3) same = false;
    ++result.trials;
    if (!same) {
      result.ok = false;
      result.first_mismatch = OracleMismatch{trial, roots, t, expected, actual};
      break;
    }
  }
  return result;
}

bool splitting_oracle(Construction construction, int rank, const ClosedForm& closed_form, int trials,
                      std::uint64_t seed) {
  return run_splitting_oracle(construction, rank, closed_form, trials, seed).ok;
}

bool sym_k_c1_oracle(int rank, int k, const std::function<Rational(const ScalarChern&, int)>& c1_of_sym_k, int trials,
                     std::uint64_t seed) {
  if (rank < 1) throw InputError("splitting oracle needs rank >= 1");
  if (k < 1) throw InputError("symmetric power index must be >= 1");
  if (trials < 1) throw InputError("splitting oracle needs at least one trial");
  RootSampler sampler(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const auto roots = sampler.next(rank);
    const auto expected = elementary_symmetric(symmetric_power_roots(roots, k), 1)[1];
    if (c1_of_sym_k(split_chern(roots), k) != expected) return false;
  }
  return true;
}

}  // namespace ulrichnorm
