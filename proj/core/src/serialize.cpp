#include "ewb/serialize.hpp"

#include <sstream>
#include <utility>

#include "ewb/errors.hpp"

namespace ewb {

namespace {

std::string power_of(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// Joins signed terms as "a + b - c".
void append_term(std::string& out, const Count& coeff, const std::string& monomial, const char* sep) {
  const bool negative = coeff < 0;
  const Count magnitude = negative ? Count(-coeff) : coeff;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += to_decimal(magnitude);
  } else if (magnitude == 1) {
    out += monomial;
  } else {
    out += to_decimal(magnitude) + sep + monomial;
  }
}

std::string bi_monomial(int s, int t) {
  std::string m = power_of("s", s);
  const std::string tt = power_of("t", t);
  if (!m.empty() && !tt.empty()) m += " ";
  return m + tt;
}

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON is missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json count_array(std::span<const Count> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

std::vector<Count> counts_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of decimal strings");
  std::vector<Count> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InvalidInput("counts must be decimal strings");
    out.push_back(parse_count(v.get<std::string>()));
  }
  return out;
}

Json to_json(const UniPoly& p) {
  Json terms = Json::array();
  for (int e = 0; e <= p.degree(); ++e) {
    if (!p[e].is_zero()) terms.push_back(Json::array({e, to_decimal(p[e])}));
  }
  return Json{{"var", "t"}, {"terms", std::move(terms)}};
}

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.s, e.t, to_decimal(c)}));
  return Json{{"var", "st"}, {"terms", std::move(terms)}};
}

UniPoly uni_poly_from_json(const Json& j) {
  if (require(j, "var") != "t") throw InvalidInput("expected a polynomial in t");
  UniPoly p;
  for (const auto& term : require(j, "terms")) {
    if (!term.is_array() || term.size() != 2) throw InvalidInput("univariate terms are [exp, coeff]");
    p += UniPoly::monomial(parse_count(term[1].get<std::string>()), term[0].get<int>());
  }
  return p;
}

BiPoly bi_poly_from_json(const Json& j) {
  if (require(j, "var") != "st") throw InvalidInput("expected a polynomial in s and t");
  BiPoly p;
  for (const auto& term : require(j, "terms")) {
    if (!term.is_array() || term.size() != 3) throw InvalidInput("bivariate terms are [s_exp, t_exp, coeff]");
    p.add_term(term[0].get<int>(), term[1].get<int>(), parse_count(term[2].get<std::string>()));
  }
  return p;
}

Json eulerian_row_json(int n, std::span<const Count> row, const std::optional<GammaVector>& gamma) {
  Json j{{"n", n}, {"A", count_array(row)}};
  Json idx = Json::array();
  Json des = Json::array();
  for (int i = 1; i <= static_cast<int>(row.size()); ++i) {
    idx.push_back(i);
    des.push_back(i - 1);
  }
  j["i"] = std::move(idx);
  j["des"] = std::move(des);
  if (gamma) j["gamma"] = count_array(gamma->gammas);
  return j;
}

std::vector<Count> eulerian_row_from_json(const Json& j) {
  auto row = counts_from_json(require(j, "A"));
  if (static_cast<int>(row.size()) != require(j, "n").get<int>()) throw InvalidInput("row length differs from n");
  return row;
}

Json gessel_json(const GesselExpansion& g) {
  Json out = Json::object();
  for (const auto& [ij, gamma] : g.gammas) {
    out["(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")"] = to_decimal(gamma);
  }
  return out;
}

Json two_sided_json(const TwoSidedTable& table, const std::optional<GesselExpansion>& gessel) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) rows.push_back(count_array(row));
  Json j{{"n", table.n()}, {"A", std::move(rows)}};
  if (gessel) {
    j["gamma"] = gessel_json(*gessel);
    j["gessel_nonnegative"] = gessel->nonnegative;
  }
  return j;
}

TwoSidedTable two_sided_from_json(const Json& j) {
  std::vector<std::vector<Count>> rows;
  for (const auto& row : require(j, "A")) rows.push_back(counts_from_json(row));
  TwoSidedTable table(std::move(rows));
  if (table.n() != require(j, "n").get<int>()) throw InvalidInput("table size differs from n");
  return table;
}

std::string format_uni(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = 0; e <= p.degree(); ++e) {
    if (!p[e].is_zero()) append_term(out, p[e], power_of("t", e), "");
  }
  return out;
}

std::string format_bi(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, c, bi_monomial(e.s, e.t), " ");
  return out;
}

std::string format_orbit_shape(int t_exp, int one_plus_t_exp) {
  std::string out = power_of("t", t_exp);
  if (one_plus_t_exp == 1) out += "(1+t)";
  if (one_plus_t_exp > 1) out += "(1+t)^" + std::to_string(one_plus_t_exp);
  return out.empty() ? "1" : out;
}

std::string format_bi_factored(const BiPoly& p) {
  if (p.is_zero()) return "0";

  // Largest monomial dividing every term.
  int s_min = p.terms().begin()->first.s;
  int t_min = p.terms().begin()->first.t;
  for (const auto& [e, c] : p.terms()) {
    s_min = std::min(s_min, e.s);
    t_min = std::min(t_min, e.t);
  }
  BiPoly rest = *p.divide_exact(BiPoly::monomial(1, s_min, t_min));

  const BiPoly one = BiPoly::monomial(1, 0, 0);
  const std::pair<const char*, BiPoly> candidates[] = {
      {"(1+s)", one + BiPoly::monomial(1, 1, 0)},
      {"(1+t)", one + BiPoly::monomial(1, 0, 1)},
      {"(s+t)", BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1)},
      {"(1+st)", one + BiPoly::monomial(1, 1, 1)},
  };

  std::vector<std::string> parts;
  const std::string mono = bi_monomial(s_min, t_min);
  if (!mono.empty()) parts.push_back(mono);
  std::vector<std::string> factor_parts;
  for (const auto& [name, factor] : candidates) {
    int exp = 0;
    while (rest.total_degree() > 0) {
      auto q = rest.divide_exact(factor);
      if (!q) break;
      rest = std::move(*q);
      ++exp;
    }
    if (exp == 1) factor_parts.emplace_back(name);
    if (exp > 1) factor_parts.push_back(std::string(name) + "^" + std::to_string(exp));
  }

  // A constant cofactor leads; anything else trails in brackets.
  std::string lead;
  std::string tail;
  if (rest != one) {
    if (rest.terms().size() == 1 && rest.total_degree() == 0) {
      lead = to_decimal(rest.terms().begin()->second);
    } else {
      tail = "[" + format_bi(rest) + "]";
    }
  }
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << ' ';
    out << s;
    first = false;
  };
  if (!lead.empty()) emit(lead);
  for (const auto& s : parts) emit(s);
  for (const auto& s : factor_parts) emit(s);
  if (!tail.empty()) emit(tail);
  return first ? "1" : out.str();
}

Json orbit_json(const Permutation& input, const Orbit& orbit) {
  const LetterClass cls = classify_letters(input);
  auto as_strings = [](const std::vector<int>& values) {
    Json arr = Json::array();
    for (int v : values) arr.push_back(std::to_string(v));
    return arr;
  };
  const int n = input.size();
  const UniPoly uni = orbit_descent_polynomial(orbit);
  const BiPoly bi = orbit_two_sided_polynomial(orbit);
  return Json{
      {"permutation", input.str()},
      {"representative", orbit.representative.str()},
      {"size", orbit.size()},
      {"peaks", as_strings(cls.peaks(input))},
      {"valleys", as_strings(cls.valleys(input))},
      {"free", as_strings(cls.free_letters(input))},
      {"uni", format_orbit_shape(orbit.peak_count + 1, n - 1 - 2 * orbit.peak_count)},
      {"bi", format_bi_factored(bi)},
      {"uni_terms", to_json(uni)},
      {"bi_terms", to_json(bi)},
  };
}

}  // namespace ewb
