#pragma once

// JSON and text renderings. Every count is written as a decimal string so
// that the schema does not change shape once values outgrow 64 bits.

#include <optional>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "ewb/eulerian.hpp"
#include "ewb/exactnum.hpp"
#include "ewb/hopping.hpp"
#include "ewb/twosided.hpp"

namespace ewb {

using Json = nlohmann::json;

Json count_array(std::span<const Count> values);
std::vector<Count> counts_from_json(const Json& j);

/// {"var": "t", "terms": [[exp, "coeff"], ...]}, exponents ascending.
Json to_json(const UniPoly& p);
/// {"var": "st", "terms": [[s_exp, t_exp, "coeff"], ...]}, exponents ascending.
Json to_json(const BiPoly& p);
UniPoly uni_poly_from_json(const Json& j);
BiPoly bi_poly_from_json(const Json& j);

/// {"n": n, "A": [...], "i": [1..n], "des": [0..n-1], "gamma": [...]}
Json eulerian_row_json(int n, std::span<const Count> row, const std::optional<GammaVector>& gamma);
std::vector<Count> eulerian_row_from_json(const Json& j);

/// {"(i,j)": "gamma", ...}
Json gessel_json(const GesselExpansion& g);

/// {"n": n, "A": [[...], ...], "gamma": {...}, "gessel_nonnegative": bool}
Json two_sided_json(const TwoSidedTable& table, const std::optional<GesselExpansion>& gessel);
TwoSidedTable two_sided_from_json(const Json& j);

/// "t + 11t^2 + 11t^3 + t^4"
std::string format_uni(const UniPoly& p);
/// "s t + 10 s^2 t^2 + s^2 t^3"
std::string format_bi(const BiPoly& p);
/// "t^2(1+t)^6"
std::string format_orbit_shape(int t_exp, int one_plus_t_exp);
/// Pulls out a monomial and powers of (1+s), (1+t), (s+t), (1+st) by trial
/// division, e.g. "s^3 t^2 (1+t)^2 (1+st)^4". Any cofactor left over is
/// printed expanded in brackets.
std::string format_bi_factored(const BiPoly& p);

/// Representative, classification and both orbit polynomials (factored and
/// expanded). `input` is the permutation the orbit was generated from.
Json orbit_json(const Permutation& input, const Orbit& orbit);

}  // namespace ewb
