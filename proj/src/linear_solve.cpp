#include "ulrichnorm/exactalg/linear_solve.hpp"

#include <utility>

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw InputError("solve_exact: row count mismatch");
  if (rows == 0) return {};
  const std::size_t cols = a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw InputError("solve_exact: ragged matrix");
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) throw SingularSystem("linear system is rank deficient in unknown " + std::to_string(col));
    std::swap(a[sel], a[pivot_row]);
    std::swap(b[sel], b[pivot_row]);
    const Rational inv = Rational(1) / a[pivot_row][col];
    for (auto& x : a[pivot_row]) x *= inv;
    b[pivot_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[pivot_row][c];
      b[r] -= f * b[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!b[r].is_zero()) {
      throw InconsistentData("overdetermined linear system is inconsistent (residual " + b[r].to_string() + ")");
    }
  }
  return {b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cols)};
}

}  // namespace ulrichnorm
