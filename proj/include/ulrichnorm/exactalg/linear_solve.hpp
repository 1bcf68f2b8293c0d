#pragma once

#include <vector>

#include "ulrichnorm/exactalg/rational.hpp"

namespace ulrichnorm {

/// Solves A x = b exactly. A may be overdetermined; the system must have
/// full column rank and be consistent, otherwise SingularSystem is thrown
/// (rank deficiency) or InconsistentData (no solution).
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace ulrichnorm
