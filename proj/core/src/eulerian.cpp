#include "ewb/eulerian.hpp"

#include <cstdint>

#include "ewb/errors.hpp"
#include "ewb/parallel.hpp"
#include "ewb/perm.hpp"

namespace ewb {

EulerianTable::EulerianTable(std::vector<std::vector<Count>> rows) : rows_(std::move(rows)) {
  for (std::size_t n = 1; n <= rows_.size(); ++n) {
    if (rows_[n - 1].size() != n) throw InvalidInput("Eulerian row " + std::to_string(n) + " has the wrong length");
  }
}

std::span<const Count> EulerianTable::row(int n) const {
  if (n < 1 || n > n_max()) throw InvalidInput("row " + std::to_string(n) + " not in table");
  return rows_[static_cast<std::size_t>(n - 1)];
}

const Count& EulerianTable::at(int n, int i) const {
  static const Count zero{0};
  if (n < 1 || n > n_max() || i < 1 || i > n) return zero;
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)];
}

std::vector<Count> table_brute_force(int n, const BruteForceOptions& options) {
  check_enumeration_guard(n, kBruteForceGuard, options.force);
  using Histogram = std::vector<std::uint64_t>;
  const Histogram hist = run_sharded<Histogram>(
      options.shards,
      [n, &options](Shard shard) {
        Histogram h(static_cast<std::size_t>(n), 0);
        PermutationStream stream(n, shard, true);  // guard already checked above
        while (stream.next()) ++h[static_cast<std::size_t>(descent_count(stream.current()))];
        return h;
      },
      [](Histogram& acc, const Histogram& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  return {hist.begin(), hist.end()};
}

EulerianTable table_from_recurrence(int n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  std::vector<std::vector<Count>> rows{{Count(1)}};
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<Count> row(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      Count value = 0;
      if (i <= n - 1) value += i * prev[static_cast<std::size_t>(i - 1)];
      if (i >= 2) value += (n + 1 - i) * prev[static_cast<std::size_t>(i - 2)];
      row[static_cast<std::size_t>(i - 1)] = std::move(value);
    }
    rows.push_back(std::move(row));
  }
  return EulerianTable(std::move(rows));
}

UniPoly eulerian_polynomial(std::span<const Count> row) {
  std::vector<Count> c{Count(0)};
  c.insert(c.end(), row.begin(), row.end());
  return UniPoly(std::move(c));
}

UniPoly eulerian_polynomial(int n, Source source, const BruteForceOptions& options) {
  if (source == Source::brute_force) return eulerian_polynomial(table_brute_force(n, options));
  return eulerian_polynomial(table_from_recurrence(n).row(n));
}

SeriesCheck check_power_series_window(int n, int order) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  const UniSeries window = truncated_product(eulerian_polynomial(n), geometric_power_window(n + 1, order));
  SeriesCheck out;
  out.computed = window.coeffs;
  for (int k = 0; k <= order; ++k) {
    out.expected.push_back(power(k, static_cast<unsigned>(n)));
    if (!out.first_mismatch && out.computed[static_cast<std::size_t>(k)] != out.expected.back()) {
      out.first_mismatch = k;
    }
  }
  out.pass = !out.first_mismatch.has_value();
  return out;
}

Count worpitzky(int n, int k, const EulerianTable& table) {
  if (n < 1 || n > table.n_max()) throw InvalidInput("row n not available for Worpitzky's identity");
  if (k < 0) throw InvalidInput("k must be nonnegative");
  Count sum = 0;
  for (int i = 1; i <= n; ++i) sum += table.at(n, i) * binomial(static_cast<std::int64_t>(k) + n - i, n);
  const Count expected = power(k, static_cast<unsigned>(n));
  if (sum != expected) {
    throw CheckFailure("Worpitzky identity fails at n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " +
                       to_decimal(sum) + " != " + to_decimal(expected));
  }
  return sum;
}

PolyCheck check_derivative_recurrence(int n, const EulerianTable& table) {
  if (n < 2 || n > table.n_max()) throw InvalidInput("derivative recurrence needs 2 <= n <= n_max");
  const UniPoly prev = eulerian_polynomial(table.row(n - 1));
  const UniPoly t_one_minus_t({Count(0), Count(1), Count(-1)});
  const UniPoly rhs = prev.shifted(1) * Count(n) + t_one_minus_t * prev.derivative();
  const UniPoly lhs = eulerian_polynomial(table.row(n));
  PolyCheck out;
  out.pass = lhs == rhs;
  if (!out.pass) {
    for (int e = 0; e <= std::max(lhs.degree(), rhs.degree()); ++e) {
      if (lhs[e] != rhs[e]) {
        out.detail = "t^" + std::to_string(e) + ": " + to_decimal(lhs[e]) + " vs " + to_decimal(rhs[e]);
        break;
      }
    }
  }
  return out;
}

bool GammaVector::nonnegative() const {
  for (const auto& g : gammas) {
    if (g < 0) return false;
  }
  return true;
}

UniPoly GammaVector::reconstruct() const {
  UniPoly sum;
  for (std::size_t idx = 0; idx < gammas.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    sum += UniPoly::one_plus_t_pow(n + 1 - 2 * i).shifted(i) * gammas[idx];
  }
  return sum;
}

GammaVector gamma_extract(const UniPoly& p, int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  const int top = std::max(p.degree(), n + 1);
  for (int i = 0; i <= top; ++i) {
    if (p[i] != p[n + 1 - i]) {
      throw InvalidInput("polynomial is not palindromic about (n+1)/2 for n=" + std::to_string(n));
    }
  }
  GammaVector out{n, {}};
  UniPoly residual = p;
  for (int i = 1; i <= (n + 1) / 2; ++i) {
    Count g = residual[i];
    residual -= UniPoly::one_plus_t_pow(n + 1 - 2 * i).shifted(i) * g;
    out.gammas.push_back(std::move(g));
  }
  if (!residual.is_zero()) throw CheckFailure("nonzero residual after gamma extraction");
  return out;
}

bool check_unimodality(std::span<const Count> row) {
  const std::size_t peak = (row.size() + 1) / 2;  // 1-based index of the expected maximum
  for (std::size_t i = 1; i < row.size(); ++i) {
    // row[i-1] -> row[i] is the step from index i to i+1
    if (i < peak && row[i - 1] > row[i]) return false;
    if (i >= peak && row[i - 1] < row[i]) return false;
  }
  return true;
}

}  // namespace ewb
