#pragma once

// Eulerian numbers A(n,i): permutations of length n with i-1 descents.
// Rows are indexed i = 1..n throughout, matching the usual triangle.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ewb/exactnum.hpp"

namespace ewb {

inline constexpr int kBruteForceGuard = 11;

struct BruteForceOptions {
  std::size_t shards = 1;
  bool force = false;  ///< lift kBruteForceGuard
};

enum class Source { brute_force, recurrence };

/// Triangle of Eulerian numbers for n = 1..n_max.
class EulerianTable {
 public:
  explicit EulerianTable(std::vector<std::vector<Count>> rows);

  int n_max() const { return static_cast<int>(rows_.size()); }
  std::span<const Count> row(int n) const;
  /// A(n,i); zero outside 1 <= i <= n.
  const Count& at(int n, int i) const;

  friend bool operator==(const EulerianTable&, const EulerianTable&) = default;

 private:
  std::vector<std::vector<Count>> rows_;
};

/// Row n by full enumeration of S_n, histogramming des.
std::vector<Count> table_brute_force(int n, const BruteForceOptions& options = {});

/// A(n,i) = i A(n-1,i) + (n+1-i) A(n-1,i-1), base row [1].
EulerianTable table_from_recurrence(int n_max);

/// A_n(t) = sum_i A(n,i) t^i
UniPoly eulerian_polynomial(std::span<const Count> row);
UniPoly eulerian_polynomial(int n, Source source = Source::recurrence, const BruteForceOptions& options = {});

/// Result of comparing a computed series window with an independent closed form.
struct SeriesCheck {
  bool pass = false;
  std::optional<int> first_mismatch;  ///< exponent of the first differing coefficient
  std::vector<Count> computed;
  std::vector<Count> expected;
};

/// Expands A_n(t) / (1-t)^(n+1) up to t^order and compares with k^n.
SeriesCheck check_power_series_window(int n, int order);

/// Right-hand side of Worpitzky's identity, sum_i A(n,i) binom(k+n-i, n).
/// Throws CheckFailure if it differs from k^n.
Count worpitzky(int n, int k, const EulerianTable& table);

struct PolyCheck {
  bool pass = false;
  std::string detail;  ///< empty on success, otherwise the first differing term
};

/// Checks A_n(t) = n t A_{n-1}(t) + t(1-t) A'_{n-1}(t) using the given table.
PolyCheck check_derivative_recurrence(int n, const EulerianTable& table);

/// Coefficients of a palindromic polynomial in the basis t^i (1+t)^(n+1-2i),
/// i = 1..ceil(n/2).
struct GammaVector {
  int n = 0;
  std::vector<Count> gammas;  ///< gammas[i-1] is gamma(n,i)

  bool nonnegative() const;
  UniPoly reconstruct() const;
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Peels off gamma(n,i) t^i (1+t)^(n+1-2i) for increasing i. Works for any
/// palindromic p centred at (n+1)/2; negative gammas are reported, not
/// rejected. Throws InvalidInput if p is not palindromic, CheckFailure if
/// a residual remains.
GammaVector gamma_extract(const UniPoly& p, int n);

/// Weakly rising up to index ceil(len/2), weakly falling afterwards.
bool check_unimodality(std::span<const Count> row);

}  // namespace ewb
