#pragma once

#include <cstddef>
#include <vector>

#include "ewb/exactnum.hpp"

namespace ewb {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Ratio& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ratio& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Ratio> data_;
};

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::size_t rank = 0;
  std::vector<Ratio> values;  ///< filled only for SolveStatus::unique
};

/// Exact Gauss-Jordan elimination on A x = b, where A may be overdetermined.
/// Reports inconsistency or a rank deficit instead of picking a solution.
LinearSolution solve_exact(RationalMatrix a, std::vector<Ratio> b);

}  // namespace ewb
