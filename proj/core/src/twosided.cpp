#include "ewb/twosided.hpp"

#include <cstdint>
#include <set>

#include "ewb/errors.hpp"
#include "ewb/linalg.hpp"
#include "ewb/parallel.hpp"
#include "ewb/perm.hpp"

namespace ewb {

TwoSidedTable::TwoSidedTable(int n) : n_(n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Count(0));
}

TwoSidedTable::TwoSidedTable(std::vector<std::vector<Count>> entries)
    : TwoSidedTable(static_cast<int>(entries.size())) {
  for (int i = 1; i <= n_; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n_) throw InvalidInput("two-sided table must be square");
    for (int j = 1; j <= n_; ++j) mutable_at(i, j) = row[static_cast<std::size_t>(j - 1)];
  }
}

const Count& TwoSidedTable::at(int i, int j) const {
  static const Count zero{0};
  if (i < 1 || j < 1 || i > n_ || j > n_) return zero;
  return cells_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
}

Count& TwoSidedTable::mutable_at(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw InvalidInput("two-sided index out of range");
  return cells_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
}

Count TwoSidedTable::total() const {
  Count sum = 0;
  for (const auto& c : cells_) sum += c;
  return sum;
}

Count TwoSidedTable::row_sum(int i) const {
  Count sum = 0;
  for (int j = 1; j <= n_; ++j) sum += at(i, j);
  return sum;
}

Count TwoSidedTable::column_sum(int j) const {
  Count sum = 0;
  for (int i = 1; i <= n_; ++i) sum += at(i, j);
  return sum;
}

std::vector<std::vector<Count>> TwoSidedTable::rows() const {
  std::vector<std::vector<Count>> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
  }
  return out;
}

TwoSidedTable two_sided_brute_force(int n, const BruteForceOptions& options) {
  check_enumeration_guard(n, kBruteForceGuard, options.force);
  const auto side = static_cast<std::size_t>(n);
  using Histogram = std::vector<std::uint64_t>;
  const Histogram hist = run_sharded<Histogram>(
      options.shards,
      [n, side](Shard shard) {
        Histogram h(side * side, 0);
        PermutationStream stream(n, shard, true);  // guard already checked above
        while (stream.next()) {
          const auto w = stream.current();
          ++h[static_cast<std::size_t>(inverse_descent_count(w)) * side + static_cast<std::size_t>(descent_count(w))];
        }
        return h;
      },
      [](Histogram& acc, const Histogram& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });

  TwoSidedTable table(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      table.mutable_at(i, j) = hist[static_cast<std::size_t>(i - 1) * side + static_cast<std::size_t>(j - 1)];
    }
  }
  return table;
}

std::vector<TwoSidedTable> two_sided_from_recurrence(int n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  std::vector<TwoSidedTable> tables;
  tables.emplace_back(std::vector<std::vector<Count>>{{Count(1)}});
  for (int n = 2; n <= n_max; ++n) {
    const TwoSidedTable& prev = tables.back();
    TwoSidedTable cur(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Count weighted = (i * j + n - 1) * prev.at(i, j) +
                               (1 - n + j * (n + 1 - i)) * prev.at(i - 1, j) +
                               (1 - n + i * (n + 1 - j)) * prev.at(i, j - 1) +
                               (n - 1 + (n + 1 - i) * (n + 1 - j)) * prev.at(i - 1, j - 1);
        if (weighted % n != 0) {
          throw CheckFailure("two-sided recurrence sum not divisible by n=" + std::to_string(n) + " at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
        }
        cur.mutable_at(i, j) = weighted / n;
      }
    }
    tables.push_back(std::move(cur));
  }
  return tables;
}

BiPoly two_sided_polynomial(const TwoSidedTable& table) {
  BiPoly p;
  for (int i = 1; i <= table.n(); ++i) {
    for (int j = 1; j <= table.n(); ++j) p.add_term(i, j, table.at(i, j));
  }
  return p;
}

BiPoly two_sided_polynomial(int n, Source source, const BruteForceOptions& options) {
  if (source == Source::brute_force) return two_sided_polynomial(two_sided_brute_force(n, options));
  return two_sided_polynomial(two_sided_from_recurrence(n).back());
}

GridSeriesCheck check_binomial_series_window(int n, int order) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  const UniSeries geometric = geometric_power_window(n + 1, order);
  GridSeriesCheck out;
  out.computed = truncated_product(two_sided_polynomial(n), geometric, geometric);
  for (int k = 0; k <= order && !out.first_mismatch; ++k) {
    for (int l = 0; l <= order; ++l) {
      if (out.computed.at(k, l) != binomial(static_cast<std::int64_t>(k) * l + n - 1, n)) {
        out.first_mismatch = std::pair{k, l};
        break;
      }
    }
  }
  out.pass = !out.first_mismatch.has_value();
  return out;
}

Count worpitzky_two_sided(int n, int k, int l, const TwoSidedTable& table) {
  if (table.n() != n) throw InvalidInput("table size does not match n");
  if (k < 0 || l < 0) throw InvalidInput("k and l must be nonnegative");
  Count sum = 0;
  for (int i = 1; i <= n; ++i) {
    const Count left = binomial(static_cast<std::int64_t>(k) + n - i, n);
    if (left.is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      sum += table.at(i, j) * left * binomial(static_cast<std::int64_t>(l) + n - j, n);
    }
  }
  const Count expected = binomial(static_cast<std::int64_t>(k) * l + n - 1, n);
  if (sum != expected) {
    throw CheckFailure("two-sided Worpitzky identity fails at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                       ", l=" + std::to_string(l));
  }
  return sum;
}

PolyCheck check_bivariate_recurrence(const TwoSidedTable& previous, const TwoSidedTable& current) {
  const int n = current.n();
  if (previous.n() != n - 1) throw InvalidInput("bivariate recurrence needs consecutive tables");
  const BiPoly a = two_sided_polynomial(previous);
  const BiPoly one = BiPoly::monomial(1, 0, 0);
  const BiPoly st = BiPoly::monomial(1, 1, 1);
  const BiPoly one_minus_s = one - BiPoly::monomial(1, 1, 0);
  const BiPoly one_minus_t = one - BiPoly::monomial(1, 0, 1);

  const BiPoly rhs = (st * Count(n * n) + one_minus_s * one_minus_t * Count(n - 1)) * a +
                     st * one_minus_s * a.derivative(Var::s) * Count(n) +
                     st * one_minus_t * a.derivative(Var::t) * Count(n) +
                     st * one_minus_s * one_minus_t * a.derivative(Var::s).derivative(Var::t);
  const BiPoly lhs = two_sided_polynomial(current) * Count(n);

  PolyCheck out;
  out.pass = lhs == rhs;
  if (!out.pass) {
    const BiPoly diff = lhs - rhs;
    const auto& [e, c] = *diff.terms().begin();
    out.detail = "s^" + std::to_string(e.s) + " t^" + std::to_string(e.t) + ": difference " + to_decimal(c);
  }
  return out;
}

SymmetryVerdict check_symmetries(const TwoSidedTable& table) {
  const int n = table.n();
  SymmetryVerdict v{true, true, true};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Count& a = table.at(i, j);
      v.transpose = v.transpose && a == table.at(j, i);
      v.rotation = v.rotation && a == table.at(n + 1 - i, n + 1 - j);
      v.anti_transpose = v.anti_transpose && a == table.at(n + 1 - j, n + 1 - i);
    }
  }
  return v;
}

std::vector<MonotonicityViolation> diagonal_monotonicity_probe(const TwoSidedTable& table) {
  const int half = (table.n() + 1) / 2;
  std::vector<MonotonicityViolation> out;
  for (int i = 1; i <= half; ++i) {
    for (int j = i + 1; j <= half; ++j) {
      const Count& here = table.at(i, j);
      if (table.at(i + 1, j) < here) out.push_back({i, j, i + 1, j, here, table.at(i + 1, j)});
      if (table.at(i, j - 1) < here) out.push_back({i, j, i, j - 1, here, table.at(i, j - 1)});
    }
  }
  return out;
}

BiPoly gessel_basis(int n, int i, int j) {
  const int rest = n + 1 - j - 2 * i;
  if (i < 0 || j < 0 || rest < 0) throw InvalidInput("basis exponents out of range");
  const BiPoly one = BiPoly::monomial(1, 0, 0);
  const BiPoly st = BiPoly::monomial(1, 1, 1);
  const BiPoly s_plus_t = BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1);
  return st.pow(static_cast<unsigned>(i)) * s_plus_t.pow(static_cast<unsigned>(j)) *
         (one + st).pow(static_cast<unsigned>(rest));
}

BiPoly GesselExpansion::reconstruct() const {
  BiPoly sum;
  for (const auto& [ij, gamma] : gammas) {
    if (!gamma.is_zero()) sum += gessel_basis(n, ij.first, ij.second) * gamma;
  }
  return sum;
}

GesselExpansion gessel_solve(const BiPoly& p, int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (p.swapped() != p) throw InvalidInput("polynomial is not symmetric in s and t");
  for (const auto& [e, c] : p.terms()) {
    if (e.s > n + 1 || e.t > n + 1 || p.coefficient(n + 1 - e.s, n + 1 - e.t) != c) {
      throw InvalidInput("polynomial lacks the (st)^(n+1) p(1/s,1/t) symmetry for n=" + std::to_string(n));
    }
  }

  std::vector<std::pair<int, int>> unknowns;
  std::vector<BiPoly> basis;
  for (int i = 1; 2 * i <= n + 1; ++i) {
    for (int j = 0; 2 * i + j <= n + 1; ++j) {
      unknowns.emplace_back(i, j);
      basis.push_back(gessel_basis(n, i, j));
    }
  }

  std::set<BiExp> monomials;
  for (const auto& [e, c] : p.terms()) monomials.insert(e);
  for (const auto& b : basis) {
    for (const auto& [e, c] : b.terms()) monomials.insert(e);
  }

  RationalMatrix a(monomials.size(), unknowns.size());
  std::vector<Ratio> rhs;
  rhs.reserve(monomials.size());
  std::size_t row = 0;
  for (const auto& e : monomials) {
    for (std::size_t col = 0; col < basis.size(); ++col) a(row, col) = Ratio(basis[col].coefficient(e.s, e.t));
    rhs.emplace_back(p.coefficient(e.s, e.t));
    ++row;
  }

  const LinearSolution solution = solve_exact(std::move(a), std::move(rhs));
  if (solution.status == SolveStatus::inconsistent) {
    throw CheckFailure("gamma-basis system is inconsistent for n=" + std::to_string(n));
  }
  if (solution.status == SolveStatus::underdetermined) {
    throw CheckFailure("gamma-basis system is underdetermined for n=" + std::to_string(n) + " (rank " +
                       std::to_string(solution.rank) + " < " + std::to_string(unknowns.size()) + ")");
  }

  GesselExpansion out;
  out.n = n;
  out.nonnegative = true;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const Ratio& value = solution.values[col];
    if (boost::multiprecision::denominator(value) != 1) {
      throw CheckFailure("non-integral gamma coefficient for n=" + std::to_string(n));
    }
    Count gamma = boost::multiprecision::numerator(value);
    if (gamma < 0) out.nonnegative = false;
    out.gammas.emplace(unknowns[col], std::move(gamma));
  }
  if (out.reconstruct() != p) throw CheckFailure("gamma expansion does not reconstruct the input");
  return out;
}

}  // namespace ewb
