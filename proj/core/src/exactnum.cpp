#include "ewb/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ewb/errors.hpp"

namespace ewb {

namespace {

const Count kZero{0};

int sign_of(const Count& c) { return c.sign(); }

}  // namespace

Count binomial(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < 0 || k > top) return 0;
  k = std::min(k, top - k);
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result == binom(top - k + i - 1, i - 1) here, so the division is exact.
    result *= top - k + i;
    result /= i;
  }
  return result;
}

Count factorial(unsigned n) {
  Count result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Count power(std::int64_t base, unsigned exp) {
  return boost::multiprecision::pow(Count(base), exp);
}

Count parse_count(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InvalidInput("empty integer literal");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  Count value(std::string(text.substr(pos)));
  return text[0] == '-' ? Count(-value) : value;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(Count coeff, int exp) {
  if (exp < 0) throw InvalidInput("negative exponent");
  std::vector<Count> c(static_cast<std::size_t>(exp) + 1);
  c.back() = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::one_plus_t_pow(int m) {
  if (m < 0) throw InvalidInput("negative power of (1+t)");
  std::vector<Count> c;
  c.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) c.push_back(binomial(m, i));
  return UniPoly(std::move(c));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Count& UniPoly::operator[](int exp) const {
  if (exp < 0 || exp > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(exp)];
}

const Count& UniPoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Count> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) throw InvalidInput("negative shift");
  std::vector<Count> c(static_cast<std::size_t>(k));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result({Count(1)});
  UniPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Count UniPoly::evaluate(const Count& x) const {
  Count acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Count& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Count> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::monomial(Count coeff, int s_exp, int t_exp) {
  BiPoly p;
  p.add_term(s_exp, t_exp, coeff);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var var) {
  BiPoly out;
  for (int e = 0; e <= p.degree(); ++e) {
    if (var == Var::s) {
      out.add_term(e, 0, p[e]);
    } else {
      out.add_term(0, e, p[e]);
    }
  }
  return out;
}

const Count& BiPoly::coefficient(int s_exp, int t_exp) const {
  auto it = terms_.find({s_exp, t_exp});
  return it == terms_.end() ? kZero : it->second;
}

void BiPoly::add_term(int s_exp, int t_exp, const Count& c) {
  if (c.is_zero()) return;
  if (s_exp < 0 || t_exp < 0) throw InvalidInput("negative exponent");
  auto [it, inserted] = terms_.try_emplace(BiExp{s_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::s ? e.s : e.t);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.s + e.t);
  return d;
}

BiPoly BiPoly::derivative(Var v) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (v == Var::s && e.s > 0) out.add_term(e.s - 1, e.t, c * e.s);
    if (v == Var::t && e.t > 0) out.add_term(e.s, e.t - 1, c * e.t);
  }
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e.t, e.s, c);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = monomial(1, 0, 0);
  BiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const {
  if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
  // Multivariate division under lex order (s first); the leading term of the
  // remainder strictly decreases, so this terminates.
  const auto& [lead_exp, lead_coeff] = *d.terms_.rbegin();
  BiPoly remainder = *this;
  BiPoly quotient;
  while (!remainder.is_zero()) {
    const auto [r_exp, r_coeff] = *remainder.terms_.rbegin();
    if (r_exp.s < lead_exp.s || r_exp.t < lead_exp.t) return std::nullopt;
    if (r_coeff % lead_coeff != 0) return std::nullopt;
    BiPoly step = monomial(r_coeff / lead_coeff, r_exp.s - lead_exp.s, r_exp.t - lead_exp.t);
    remainder -= step * d;
    quotient += step;
  }
  return quotient;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.s, e.t, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.s, e.t, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Count& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.s + eb.s, ea.t + eb.t, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series windows

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw InvalidInput("negative series order");
  const auto side = static_cast<std::size_t>(order) + 1;
  grid_.assign(side * side, Count(0));
}

std::size_t BiSeries::index(int k, int l) const {
  if (k < 0 || l < 0 || k > order_ || l > order_) throw InvalidInput("series index outside window");
  return static_cast<std::size_t>(k) * (static_cast<std::size_t>(order_) + 1) + static_cast<std::size_t>(l);
}

UniSeries geometric_power_window(int m, int order) {
  if (m < 1) throw InvalidInput("geometric power must be at least 1");
  if (order < 0) throw InvalidInput("negative series order");
  UniSeries out;
  out.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out.coeffs.push_back(binomial(k + m - 1, m - 1));
  return out;
}

UniSeries truncated_product(const UniPoly& p, const UniSeries& f) {
  UniSeries out;
  out.coeffs.assign(f.coeffs.size(), Count(0));
  for (int k = 0; k <= f.order(); ++k) {
    for (int a = 0; a <= std::min(k, p.degree()); ++a) {
      if (!p[a].is_zero()) out.coeffs[k] += p[a] * f.coeffs[k - a];
    }
  }
  return out;
}

BiSeries truncated_product(const BiPoly& p, const UniSeries& f_s, const UniSeries& g_t) {
  if (f_s.order() != g_t.order()) throw InvalidInput("series windows differ in order");
  const int order = f_s.order();
  BiSeries out(order);
  for (const auto& [e, c] : p.terms()) {
    for (int k = e.s; k <= order; ++k) {
      const Count left = c * f_s.coeffs[k - e.s];
      for (int l = e.t; l <= order; ++l) out.at(k, l) += left * g_t.coeffs[l - e.t];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

using RatPoly = std::vector<Ratio>;

RatPoly to_rational(const UniPoly& p) {
  RatPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b over Q.
RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const Ratio factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Scales a rational polynomial by a positive rational so the result has
// coprime integer coefficients. Signs are unchanged.
UniPoly primitive_part(const RatPoly& p) {
  Count den_lcm = 1;
  for (const auto& c : p) {
    const Count d = boost::multiprecision::denominator(c);
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
  }
  std::vector<Count> ints;
  Count content = 0;
  for (const auto& c : p) {
    Count v = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
    content = boost::multiprecision::gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (content != 0) {
    for (auto& v : ints) v /= content;
  }
  return UniPoly(std::move(ints));
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RatPoly r = remainder(to_rational(chain[chain.size() - 2]), to_rational(chain.back()));
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(primitive_part(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

RootCount sturm_negative_root_count(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("root count of the zero polynomial");

  // Strip the factor t^m so that 0 is not a root of the counted polynomial.
  int m = 0;
  while (p[m].is_zero()) ++m;
  std::vector<Count> rest(p.coefficients().begin() + m, p.coefficients().end());
  const UniPoly q(std::move(rest));

  const auto chain = sturm_chain(q);
  std::vector<int> at_neg_inf;
  std::vector<int> at_zero;
  for (const auto& f : chain) {
    const int lead = sign_of(f.leading());
    at_neg_inf.push_back(f.degree() % 2 == 0 ? lead : -lead);
    at_zero.push_back(sign_of(f[0]));
  }

  RootCount out;
  out.negative_roots = variations(at_neg_inf) - variations(at_zero);
  out.squarefree = m <= 1 && chain.back().degree() == 0;
  return out;
}

}  // namespace ewb
