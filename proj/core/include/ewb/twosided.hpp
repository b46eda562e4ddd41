#pragma once

// Two-sided Eulerian numbers A(n,i,j): permutations w with des(w^-1) = i-1
// and des(w) = j-1. The bivariate polynomial uses s for inverse descents and
// t for descents.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ewb/eulerian.hpp"
#include "ewb/exactnum.hpp"

namespace ewb {

class TwoSidedTable {
 public:
  /// n x n grid of zeros.
  explicit TwoSidedTable(int n);
  /// entries[i-1][j-1] = A(n,i,j); must be square.
  explicit TwoSidedTable(std::vector<std::vector<Count>> entries);

  int n() const { return n_; }
  /// Zero outside 1 <= i, j <= n.
  const Count& at(int i, int j) const;
  Count& mutable_at(int i, int j);

  Count total() const;
  /// sum_j A(n,i,j)
  Count row_sum(int i) const;
  /// sum_i A(n,i,j)
  Count column_sum(int j) const;

  std::vector<std::vector<Count>> rows() const;

  friend bool operator==(const TwoSidedTable&, const TwoSidedTable&) = default;

 private:
  int n_;
  std::vector<Count> cells_;
};

TwoSidedTable two_sided_brute_force(int n, const BruteForceOptions& options = {});

/// Tables for n = 1..n_max via the four-term recurrence, computed in
/// integers; the weighted sum is checked for divisibility by n.
std::vector<TwoSidedTable> two_sided_from_recurrence(int n_max);

/// A_n(s,t) = sum A(n,i,j) s^i t^j
BiPoly two_sided_polynomial(const TwoSidedTable& table);
BiPoly two_sided_polynomial(int n, Source source = Source::recurrence, const BruteForceOptions& options = {});

struct GridSeriesCheck {
  bool pass = false;
  std::optional<std::pair<int, int>> first_mismatch;  ///< (k, l)
  BiSeries computed{0};
};

/// Expands A_n(s,t) / ((1-s)^(n+1) (1-t)^(n+1)) on the window 0..order in
/// both variables and compares entry (k,l) with binom(kl + n - 1, n).
GridSeriesCheck check_binomial_series_window(int n, int order);

/// sum A(n,i,j) binom(k+n-i, n) binom(l+n-j, n); throws CheckFailure unless
/// it equals binom(kl + n - 1, n).
Count worpitzky_two_sided(int n, int k, int l, const TwoSidedTable& table);

/// n A_n = (n^2 st + (n-1)(1-s)(1-t)) A_{n-1} + n st (1-s) dA/ds
///         + n st (1-t) dA/dt + st (1-s)(1-t) d2A/dsdt, with A = A_{n-1}.
PolyCheck check_bivariate_recurrence(const TwoSidedTable& previous, const TwoSidedTable& current);

struct SymmetryVerdict {
  bool transpose = false;       ///< A(i,j) = A(j,i)
  bool rotation = false;        ///< A(i,j) = A(n+1-i, n+1-j)
  bool anti_transpose = false;  ///< A(i,j) = A(n+1-j, n+1-i)
  bool all() const { return transpose && rotation && anti_transpose; }
};

SymmetryVerdict check_symmetries(const TwoSidedTable& table);

/// A step toward the main diagonal that lands on a strictly smaller entry.
struct MonotonicityViolation {
  int i = 0;
  int j = 0;
  int to_i = 0;
  int to_j = 0;
  Count from;
  Count to;
};

/// Scans i < j <= ceil(n/2) for steps (i,j) -> (i+1,j) and (i,j) -> (i,j-1)
/// that decrease.
std::vector<MonotonicityViolation> diagonal_monotonicity_probe(const TwoSidedTable& table);

/// (st)^i (s+t)^j (1+st)^(n+1-j-2i)
BiPoly gessel_basis(int n, int i, int j);

struct GesselExpansion {
  int n = 0;
  std::map<std::pair<int, int>, Count> gammas;  ///< (i, j) -> gamma(n,i,j), zeros included
  bool nonnegative = false;

  BiPoly reconstruct() const;
};

/// Expresses a polynomial with the two-sided symmetries in the basis
/// (st)^i (s+t)^j (1+st)^(n+1-j-2i), i >= 1, j >= 0, 2i + j <= n+1, by exact
/// elimination over the full coefficient system. Throws InvalidInput when p
/// lacks the symmetries, CheckFailure when the system has no unique integral
/// solution.
GesselExpansion gessel_solve(const BiPoly& p, int n);

}  // namespace ewb
