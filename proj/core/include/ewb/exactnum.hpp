#pragma once

// Exact integer/rational arithmetic and the polynomial carriers used by every
// other module. Nothing in here ever touches floating point.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ewb {

using Count = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

/// binom(top, k) by the multiplicative formula with exact division at each
/// step. Zero when k < 0, top < 0 or k > top.
Count binomial(std::int64_t top, std::int64_t k);

Count factorial(unsigned n);

/// base^exp for small nonnegative bases; 0^0 = 1.
Count power(std::int64_t base, unsigned exp);

/// Parses an optionally signed decimal string. Throws InvalidInput.
Count parse_count(std::string_view text);

inline std::string to_decimal(const Count& c) { return c.str(); }

// ---------------------------------------------------------------------------
// Univariate polynomials in t, dense.

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Count> coeffs);

  static UniPoly monomial(Count coeff, int exp);
  /// (1 + t)^m
  static UniPoly one_plus_t_pow(int m);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^exp, zero outside the stored range.
  const Count& operator[](int exp) const;
  std::span<const Count> coefficients() const { return coeffs_; }
  const Count& leading() const;

  UniPoly derivative() const;
  /// Multiplies by t^k.
  UniPoly shifted(int k) const;
  UniPoly pow(unsigned e) const;
  Count evaluate(const Count& x) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Count& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Count& c) { return a *= c; }
  friend UniPoly operator*(const Count& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize();
  std::vector<Count> coeffs_;
};

// ---------------------------------------------------------------------------
// Bivariate polynomials in s and t, sparse.

enum class Var { s, t };

struct BiExp {
  int s = 0;
  int t = 0;
  auto operator<=>(const BiExp&) const = default;
};

class BiPoly {
 public:
  using TermMap = std::map<BiExp, Count>;

  BiPoly() = default;

  static BiPoly monomial(Count coeff, int s_exp, int t_exp);
  /// Embeds p(t) or p(s).
  static BiPoly from_uni(const UniPoly& p, Var var);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  const Count& coefficient(int s_exp, int t_exp) const;
  /// Adds c to the coefficient of s^a t^b, dropping the entry if it cancels.
  void add_term(int s_exp, int t_exp, const Count& c);

  int degree_in(Var v) const;
  int total_degree() const;

  BiPoly derivative(Var v) const;
  /// p(t, s)
  BiPoly swapped() const;
  BiPoly pow(unsigned e) const;

  /// Quotient if d divides *this exactly, nullopt otherwise.
  std::optional<BiPoly> divide_exact(const BiPoly& d) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const Count& scalar);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Count& c) { return a *= c; }
  friend BiPoly operator*(const Count& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TermMap terms_;
};

inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }
inline BiPoly poly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }
inline BiPoly partial_derivative(const BiPoly& p, Var v) { return p.derivative(v); }

// ---------------------------------------------------------------------------
// Truncated power series windows.

/// Coefficients of a univariate series for exponents 0..order.
struct UniSeries {
  std::vector<Count> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const UniSeries&, const UniSeries&) = default;
};

/// (order+1) x (order+1) grid; at(k, l) is the coefficient of s^k t^l.
class BiSeries {
 public:
  explicit BiSeries(int order);
  int order() const { return order_; }
  Count& at(int k, int l) { return grid_[index(k, l)]; }
  const Count& at(int k, int l) const { return grid_[index(k, l)]; }

 private:
  std::size_t index(int k, int l) const;
  int order_;
  std::vector<Count> grid_;
};

/// Coefficients of (1 - t)^(-m) up to t^order: binom(k + m - 1, m - 1).
UniSeries geometric_power_window(int m, int order);

/// p(t) * f(t) modulo t^(order+1), with order taken from f.
UniSeries truncated_product(const UniPoly& p, const UniSeries& f);

/// p(s, t) * f(s) * g(t) truncated to the window of f/g (same order).
BiSeries truncated_product(const BiPoly& p, const UniSeries& f_s, const UniSeries& g_t);

// ---------------------------------------------------------------------------
// Real-root counting.

struct RootCount {
  int negative_roots = 0;  ///< distinct real roots in (-inf, 0)
  bool squarefree = false;
  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Sturm-sequence count over the rationals. Throws InvalidInput on zero.
RootCount sturm_negative_root_count(const UniPoly& p);

}  // namespace ewb
