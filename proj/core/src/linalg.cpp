#include "ewb/linalg.hpp"

#include <utility>

#include "ewb/errors.hpp"

namespace ewb {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Ratio(0)) {}

LinearSolution solve_exact(RationalMatrix a, std::vector<Ratio> b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side has the wrong length");

  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;

    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      std::swap(b[pivot], b[r]);
    }
    const Ratio inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Ratio factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
      b[i] -= factor * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  if (r < cols) {
    out.status = SolveStatus::underdetermined;
    return out;
  }

  out.status = SolveStatus::unique;
  out.values.assign(cols, Ratio(0));
  for (std::size_t i = 0; i < r; ++i) out.values[pivot_col_of_row[i]] = b[i];
  return out;
}

}  // namespace ewb
