#include "cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "cli/render.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "ewb/errors.hpp"
#include "ewb/eulerian.hpp"
#include "ewb/hopping.hpp"
#include "ewb/perm.hpp"
#include "ewb/serialize.hpp"
#include "ewb/twosided.hpp"

namespace ewb::cli {

namespace {

// Rows at or below this size are recomputed by brute force and compared
// with the recurrence unless --method says otherwise.
constexpr int kCrossCheckLimit = 9;

// Recurrence sizes beyond these need --force.
constexpr int kEulerianRecurrenceCap = 1000;
constexpr int kTwoSidedRecurrenceCap = 64;
constexpr int kGesselCap = 30;

struct RunConfig {
  int n = 0;
  int n_max = 0;
  int k = 0;
  int l = 0;
  int terms = 8;
  std::string format = "text";
  std::string cache_dir;
  std::size_t shards = 0;  ///< 0 = subcommand default
  bool force = false;
  std::string method = "both";
  std::string suite = "all";
  bool two_sided = false;
  bool inject_failure = false;
  std::string permutation;

  const CLI::App* chosen = nullptr;  ///< the parsed subcommand

  bool given(const std::string& flag) const { return chosen->count(flag) > 0; }
};

struct Context {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;
  std::optional<TableCache> cache;
};

struct Range {
  int lo;
  int hi;
  bool single;
};

Range requested_range(const RunConfig& c) {
  if (c.given("--n")) return {c.n, c.n, true};
  if (c.given("--n-max")) return {1, c.n_max, false};
  throw InvalidInput("one of --n or --n-max is required");
}

std::size_t brute_force_shards(const RunConfig& c) {
  if (c.shards > 0) return c.shards;
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_cap(int n, int cap, bool force, const char* what) {
  if (n > cap && !force) {
    throw GuardRailError(std::string(what) + " above n=" + std::to_string(cap) + " needs --force");
  }
}

std::string verdict(bool nonnegative) { return nonnegative ? "NONNEGATIVE" : "NEGATIVE"; }

// ---------------------------------------------------------------------------
// Table producers shared by several subcommands.

EulerianRows eulerian_rows(Context& ctx, Range range) {
  const auto& c = ctx.cfg;
  EulerianRows rows;
  if (c.method == "brute-force") {
    for (int n = range.lo; n <= range.hi; ++n) rows[n] = table_brute_force(n, {brute_force_shards(c), c.force});
    return rows;
  }

  check_cap(range.hi, kEulerianRecurrenceCap, c.force, "the Eulerian recurrence");
  std::optional<EulerianTable> table;
  for (int n = range.lo; n <= range.hi; ++n) {
    if (ctx.cache) {
      if (auto cached = ctx.cache->load_eulerian(n)) {
        rows[n] = std::move(*cached);
        continue;
      }
    }
    if (!table) table = table_from_recurrence(range.hi);
    const auto row = table->row(n);
    std::vector<Count> values(row.begin(), row.end());
    if (c.method == "both" && n <= kCrossCheckLimit) {
      if (table_brute_force(n, {brute_force_shards(c), false}) != values) {
        throw CheckFailure("brute force and recurrence disagree at n=" + std::to_string(n));
      }
    }
    if (ctx.cache) ctx.cache->store_eulerian(n, values);
    rows[n] = std::move(values);
  }
  return rows;
}

std::vector<TwoSidedTable> two_sided_tables(Context& ctx, Range range, bool cross_check) {
  const auto& c = ctx.cfg;
  std::vector<TwoSidedTable> tables;
  if (c.method == "brute-force") {
    for (int n = range.lo; n <= range.hi; ++n) tables.push_back(two_sided_brute_force(n, {brute_force_shards(c), c.force}));
    return tables;
  }

  check_cap(range.hi, kTwoSidedRecurrenceCap, c.force, "the two-sided recurrence");
  std::optional<std::vector<TwoSidedTable>> computed;
  for (int n = range.lo; n <= range.hi; ++n) {
    if (ctx.cache) {
      if (auto cached = ctx.cache->load_two_sided(n)) {
        tables.push_back(std::move(*cached));
        continue;
      }
    }
    if (!computed) computed = two_sided_from_recurrence(range.hi);
    const TwoSidedTable& t = (*computed)[static_cast<std::size_t>(n - 1)];
    if (cross_check && c.method == "both" && n <= kCrossCheckLimit) {
      if (two_sided_brute_force(n, {brute_force_shards(c), false}) != t) {
        throw CheckFailure("brute force and recurrence disagree at n=" + std::to_string(n));
      }
    }
    if (ctx.cache) ctx.cache->store_two_sided(t);
    tables.push_back(t);
  }
  return tables;
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_stats(Context& ctx) {
  const Permutation w = Permutation::parse(ctx.cfg.permutation);
  const StatProfile p = statistic_profile(w);
  const std::pair<const char*, int> fields[] = {{"des", p.des}, {"ides", p.ides}, {"inv", p.inv},
                                                {"asc", p.asc}, {"exc", p.exc},   {"run", p.run}};
  if (ctx.cfg.format == "json") {
    Json j{{"permutation", w.str()}};
    for (const auto& [name, v] : fields) j[name] = std::to_string(v);
    ctx.out << j.dump() << '\n';
  } else if (ctx.cfg.format == "csv") {
    ctx.out << "permutation";
    for (const auto& f : fields) ctx.out << ',' << f.first;
    ctx.out << '\n' << '"' << w.str() << '"';
    for (const auto& f : fields) ctx.out << ',' << f.second;
    ctx.out << '\n';
  } else {
    bool first = true;
    for (const auto& [name, v] : fields) {
      ctx.out << (first ? "" : " ") << name << '=' << v;
      first = false;
    }
    ctx.out << '\n';
  }
  return kExitOk;
}

int cmd_eulerian(Context& ctx) {
  const Range range = requested_range(ctx.cfg);
  const EulerianRows rows = eulerian_rows(ctx, range);
  if (ctx.cfg.format == "json") {
    Json all = Json::array();
    for (const auto& [n, row] : rows) all.push_back(eulerian_row_json(n, row, gamma_extract(eulerian_polynomial(row), n)));
    const Json doc = range.single ? all.front() : Json{{"n_max", range.hi}, {"rows", all}};
    ctx.out << doc.dump() << '\n';
  } else if (ctx.cfg.format == "csv") {
    ctx.out << eulerian_csv(rows);
  } else {
    ctx.out << eulerian_text(rows);
  }
  return kExitOk;
}

int cmd_two_sided(Context& ctx) {
  const Range range = requested_range(ctx.cfg);
  const auto tables = two_sided_tables(ctx, range, true);
  if (ctx.cfg.format == "json") {
    Json all = Json::array();
    for (const auto& t : tables) {
      std::optional<GesselExpansion> g;
      if (t.n() <= kGesselCap || ctx.cfg.force) g = gessel_solve(two_sided_polynomial(t), t.n());
      all.push_back(two_sided_json(t, g));
    }
    const Json doc = range.single ? all.front() : Json{{"n_max", range.hi}, {"tables", all}};
    ctx.out << doc.dump() << '\n';
  } else if (ctx.cfg.format == "csv") {
    ctx.out << two_sided_csv(tables);
  } else {
    ctx.out << two_sided_text(tables);
  }
  return kExitOk;
}

int cmd_gamma(Context& ctx) {
  const Range range = requested_range(ctx.cfg);
  const EulerianRows rows = eulerian_rows(ctx, range);
  std::map<int, GammaVector> gammas;
  for (const auto& [n, row] : rows) gammas.emplace(n, gamma_extract(eulerian_polynomial(row), n));

  if (ctx.cfg.format == "json") {
    Json all = Json::array();
    for (const auto& [n, g] : gammas) {
      all.push_back(Json{{"n", n}, {"gamma", count_array(g.gammas)}, {"nonnegative", g.nonnegative()}});
    }
    const Json doc = range.single ? all.front() : Json{{"n_max", range.hi}, {"rows", all}};
    ctx.out << doc.dump() << '\n';
    return kExitOk;
  }
  EulerianRows as_rows;
  for (const auto& [n, g] : gammas) as_rows[n] = g.gammas;
  std::string body = ctx.cfg.format == "csv" ? eulerian_csv(as_rows) : eulerian_text(as_rows);
  ctx.out << body;
  if (ctx.cfg.format == "text") {
    const bool all_nonneg = std::all_of(gammas.begin(), gammas.end(), [](const auto& e) { return e.second.nonnegative(); });
    ctx.out << "verdict: " << verdict(all_nonneg) << '\n';
  }
  return kExitOk;
}

int cmd_gessel(Context& ctx) {
  const Range range = requested_range(ctx.cfg);
  check_cap(range.hi, kGesselCap, ctx.cfg.force, "the Gessel solve");
  const auto tables = two_sided_tables(ctx, range, false);
  std::vector<GesselExpansion> expansions;
  for (const auto& t : tables) expansions.push_back(gessel_solve(two_sided_polynomial(t), t.n()));

  if (ctx.cfg.format == "json") {
    Json all = Json::array();
    for (const auto& g : expansions) {
      all.push_back(Json{{"n", g.n}, {"gamma", gessel_json(g)}, {"nonnegative", g.nonnegative},
                         {"verdict", verdict(g.nonnegative)}});
    }
    const Json doc = range.single ? all.front() : Json{{"n_max", range.hi}, {"expansions", all}};
    ctx.out << doc.dump() << '\n';
  } else if (ctx.cfg.format == "csv") {
    ctx.out << "n,i,j,gamma\n";
    for (const auto& g : expansions) {
      for (const auto& [ij, v] : g.gammas) ctx.out << g.n << ',' << ij.first << ',' << ij.second << ',' << v << '\n';
    }
  } else {
    for (std::size_t e = 0; e < expansions.size(); ++e) {
      const auto& g = expansions[e];
      if (e > 0) ctx.out << '\n';
      ctx.out << "n = " << g.n << '\n';
      const int j_max = std::max(g.n - 1, 0);
      std::vector<std::vector<std::string>> cells{{"i\\j"}};
      for (int j = 0; j <= j_max; ++j) cells[0].push_back(std::to_string(j));
      for (const auto& [ij, v] : g.gammas) {
        if (static_cast<std::size_t>(ij.first) >= cells.size()) cells.push_back({std::to_string(ij.first)});
        cells.back().push_back(to_decimal(v));
      }
      ctx.out << aligned_grid(cells) << "verdict: " << verdict(g.nonnegative) << '\n';
    }
  }
  return kExitOk;
}

int cmd_orbit(Context& ctx) {
  const Permutation w = Permutation::parse(ctx.cfg.permutation);
  const Orbit orbit = orbit_of(w);
  const Json j = orbit_json(w, orbit);
  if (ctx.cfg.format == "json") {
    ctx.out << j.dump() << '\n';
    return kExitOk;
  }
  auto listing = [](const Json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + v.get<std::string>();
    return s;
  };
  const std::string uni_expanded = format_uni(uni_poly_from_json(j["uni_terms"]));
  const std::string bi_expanded = format_bi(bi_poly_from_json(j["bi_terms"]));
  const std::pair<std::string, std::string> fields[] = {
      {"permutation", w.str()},
      {"representative", orbit.representative.str()},
      {"size", std::to_string(orbit.size())},
      {"peaks", listing(j["peaks"])},
      {"valleys", listing(j["valleys"])},
      {"free", listing(j["free"])},
      {"uni", j["uni"].get<std::string>()},
      {"uni_expanded", uni_expanded},
      {"bi", j["bi"].get<std::string>()},
      {"bi_expanded", bi_expanded},
  };
  if (ctx.cfg.format == "csv") {
    ctx.out << "field,value\n";
    for (const auto& [k, v] : fields) ctx.out << k << ",\"" << v << "\"\n";
  } else {
    for (const auto& [k, v] : fields) ctx.out << k << ": " << v << '\n';
  }
  return kExitOk;
}

int cmd_orbits(Context& ctx) {
  const int n = ctx.cfg.n;
  const auto census = orbit_census(n, ctx.cfg.force);
  const GammaVector gamma = gamma_extract(eulerian_polynomial(table_from_recurrence(n).row(n)), n);

  bool match = census.size() <= gamma.gammas.size();
  for (std::size_t p = 0; p < gamma.gammas.size(); ++p) {
    const auto it = census.find(static_cast<int>(p));
    match = match && (it == census.end() ? Count(0) : it->second) == gamma.gammas[p];
  }

  if (ctx.cfg.format == "json") {
    Json counts = Json::object();
    for (const auto& [p, c] : census) counts[std::to_string(p)] = to_decimal(c);
    ctx.out << Json{{"n", n}, {"orbits_by_peaks", counts}, {"gamma", count_array(gamma.gammas)}, {"match", match}}.dump()
            << '\n';
  } else {
    std::vector<std::vector<std::string>> cells{{"peaks", "orbits", "gamma"}};
    for (std::size_t p = 0; p < gamma.gammas.size(); ++p) {
      const auto it = census.find(static_cast<int>(p));
      cells.push_back({std::to_string(p), it == census.end() ? "0" : to_decimal(it->second), to_decimal(gamma.gammas[p])});
    }
    if (ctx.cfg.format == "csv") {
      for (const auto& row : cells) ctx.out << row[0] << ',' << row[1] << ',' << row[2] << '\n';
    } else {
      ctx.out << aligned_grid(cells) << "orbit counts " << (match ? "match" : "DO NOT match") << " the gamma vector\n";
    }
  }
  if (!match) ctx.err << "error: orbit census differs from the gamma vector at n=" << n << '\n';
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_series(Context& ctx) {
  const auto& c = ctx.cfg;
  const int n = c.n;
  const bool point = c.given("--k");
  if (c.two_sided && point != c.given("--l")) throw InvalidInput("--k and --l go together with --two-sided");
  if (!c.two_sided && c.given("--l")) throw InvalidInput("--l needs --two-sided");

  if (point) {
    // A single coefficient through the Worpitzky-type expansion; a mismatch
    // with the closed form throws CheckFailure.
    Json j{{"n", n}, {"k", c.k}};
    Count value;
    if (c.two_sided) {
      value = worpitzky_two_sided(n, c.k, c.l, two_sided_from_recurrence(n).back());
      j["l"] = c.l;
    } else {
      value = worpitzky(n, c.k, table_from_recurrence(n));
    }
    j["value"] = to_decimal(value);
    if (c.format == "json") {
      ctx.out << j.dump() << '\n';
    } else if (c.format == "csv") {
      ctx.out << (c.two_sided ? "n,k,l,value\n" : "n,k,value\n") << n << ',' << c.k;
      if (c.two_sided) ctx.out << ',' << c.l;
      ctx.out << ',' << value << '\n';
    } else {
      ctx.out << value << '\n';
    }
    return kExitOk;
  }

  if (!c.two_sided) {
    const SeriesCheck s = check_power_series_window(n, c.terms);
    if (c.format == "json") {
      ctx.out << Json{{"n", n}, {"terms", c.terms}, {"coefficients", count_array(s.computed)},
                      {"expected", count_array(s.expected)}, {"pass", s.pass}}.dump()
              << '\n';
    } else {
      std::vector<std::vector<std::string>> cells{{"k", "coefficient", "k^n"}};
      for (std::size_t k = 0; k < s.computed.size(); ++k) {
        cells.push_back({std::to_string(k), to_decimal(s.computed[k]), to_decimal(s.expected[k])});
      }
      if (c.format == "csv") {
        for (const auto& row : cells) ctx.out << row[0] << ',' << row[1] << ',' << row[2] << '\n';
      } else {
        ctx.out << aligned_grid(cells) << (s.pass ? "window matches\n" : "window MISMATCH\n");
      }
    }
    if (!s.pass) ctx.err << "error: series window mismatch at t^" << *s.first_mismatch << '\n';
    return s.pass ? kExitOk : kExitCheckFailed;
  }

  const GridSeriesCheck g = check_binomial_series_window(n, c.terms);
  std::vector<std::vector<std::string>> cells{{"k\\l"}};
  for (int l = 0; l <= c.terms; ++l) cells[0].push_back(std::to_string(l));
  for (int k = 0; k <= c.terms; ++k) {
    cells.push_back({std::to_string(k)});
    for (int l = 0; l <= c.terms; ++l) cells.back().push_back(to_decimal(g.computed.at(k, l)));
  }
  if (c.format == "json") {
    Json grid = Json::array();
    for (int k = 0; k <= c.terms; ++k) {
      Json row = Json::array();
      for (int l = 0; l <= c.terms; ++l) row.push_back(to_decimal(g.computed.at(k, l)));
      grid.push_back(std::move(row));
    }
    ctx.out << Json{{"n", n}, {"terms", c.terms}, {"coefficients", grid}, {"pass", g.pass}}.dump() << '\n';
  } else if (c.format == "csv") {
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) ctx.out << (i ? "," : "") << row[i];
      ctx.out << '\n';
    }
  } else {
    ctx.out << aligned_grid(cells) << (g.pass ? "window matches binom(kl+n-1, n)\n" : "window MISMATCH\n");
  }
  if (!g.pass) {
    ctx.err << "error: series window mismatch at s^" << g.first_mismatch->first << " t^" << g.first_mismatch->second
            << '\n';
  }
  return g.pass ? kExitOk : kExitCheckFailed;
}

int cmd_verify(Context& ctx) {
  const auto& c = ctx.cfg;
  SuiteOptions options;
  if (c.given("--n-max")) options.n_max = c.n_max;
  options.shards = brute_force_shards(c);
  options.inject_failure = c.inject_failure;
  const VerificationReport report = run_suite(c.suite, options);

  if (c.format == "json") {
    ctx.out << report_json(report).dump() << '\n';
  } else if (c.format == "csv") {
    ctx.out << "status,description,detail\n";
    for (const auto& check : report.checks) {
      ctx.out << (check.pass ? "pass" : "fail") << ",\"" << check.description << "\",\"" << check.detail << "\"\n";
    }
  } else {
    ctx.out << report_text(report);
  }
  ctx.err << "suite " << report.suite << " finished in " << report.elapsed.count() << " ms\n";
  return report.exit_status();
}

// ---------------------------------------------------------------------------
// Command-line surface.

void add_format(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_range(CLI::App* sub, RunConfig& c) {
  auto* n = sub->add_option("--n", c.n, "Single n")->check(CLI::PositiveNumber);
  auto* n_max = sub->add_option("--n-max", c.n_max, "All n from 1 to this value")->check(CLI::PositiveNumber);
  n->excludes(n_max);
}

void add_engine(CLI::App* sub, RunConfig& c) {
  sub->add_option("--method", c.method, "both: recurrence, cross-checked by brute force for small n")
      ->check(CLI::IsMember({"both", "recurrence", "brute-force"}));
  sub->add_option("--shards", c.shards, "Brute-force worker count (default: hardware threads)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  sub->add_option("--cache", c.cache_dir, "Directory of verified tables (or $EULERIAN_WORKBENCH_CACHE)");
  sub->add_flag("--force", c.force, "Lift the size guard rails");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Eulerian and two-sided Eulerian numbers, cross-verified by independent methods", "ewb"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "Permutation statistics");
  stats->add_option("permutation", cfg.permutation, "One-line notation, e.g. 5624713 or 10,3,1,...")->required();
  add_format(stats, cfg);

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian numbers A(n,i)");
  add_range(eulerian, cfg);
  add_engine(eulerian, cfg);
  add_format(eulerian, cfg);

  auto* two_sided = app.add_subcommand("two-sided", "Two-sided Eulerian numbers A(n,i,j)");
  add_range(two_sided, cfg);
  add_engine(two_sided, cfg);
  add_format(two_sided, cfg);

  auto* gamma = app.add_subcommand("gamma", "Gamma vectors of the Eulerian polynomials");
  add_range(gamma, cfg);
  add_engine(gamma, cfg);
  add_format(gamma, cfg);

  auto* gessel = app.add_subcommand("gessel", "Expansion of A_n(s,t) in the (st)^i (s+t)^j (1+st)^m basis");
  add_range(gessel, cfg);
  add_engine(gessel, cfg);
  add_format(gessel, cfg);

  auto* orbit = app.add_subcommand("orbit", "Valley-hopping orbit of a permutation");
  orbit->add_option("permutation", cfg.permutation, "One-line notation")->required();
  add_format(orbit, cfg);

  auto* orbits = app.add_subcommand("orbits", "Valley-hopping orbits of S_n by peak count");
  orbits->add_option("--n", cfg.n, "Permutation length")->required()->check(CLI::PositiveNumber);
  orbits->add_flag("--force", cfg.force, "Lift the size guard rail");
  add_format(orbits, cfg);

  auto* series = app.add_subcommand("series", "Generating-function windows");
  series->add_option("--n", cfg.n, "Permutation length")->required()->check(CLI::PositiveNumber);
  series->add_option("--terms", cfg.terms, "Window order K (exponents 0..K)")->check(CLI::Range(0, 200));
  series->add_flag("--two-sided", cfg.two_sided, "Bivariate window in s and t");
  series->add_option("--k", cfg.k, "Single coefficient of t^k")->check(CLI::NonNegativeNumber);
  series->add_option("--l", cfg.l, "With --two-sided, coefficient of s^k t^l")->check(CLI::NonNegativeNumber);
  add_format(series, cfg);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites(kSuiteNames.begin(), kSuiteNames.end());
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", cfg.n_max, "Largest n (suite default otherwise)")
                      ->check(CLI::PositiveNumber);
  verify->add_option("--shards", cfg.shards, "Brute-force worker count")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  verify->add_flag("--inject-failure", cfg.inject_failure)->group("");
  add_format(verify, cfg);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.chosen = app.get_subcommands().front();
  // Data is held back until the command succeeds so failures never leave
  // half a table on stdout.
  std::ostringstream buffer;
  Context buffered{cfg, buffer, err, std::nullopt};
  if (const auto dir = resolve_cache_dir(cfg.cache_dir)) buffered.cache.emplace(*dir, err);

  int code = kExitOk;
  try {
    const std::string name = cfg.chosen->get_name();
    if (name == "stats") code = cmd_stats(buffered);
    else if (name == "eulerian") code = cmd_eulerian(buffered);
    else if (name == "two-sided") code = cmd_two_sided(buffered);
    else if (name == "gamma") code = cmd_gamma(buffered);
    else if (name == "gessel") code = cmd_gessel(buffered);
    else if (name == "orbit") code = cmd_orbit(buffered);
    else if (name == "orbits") code = cmd_orbits(buffered);
    else if (name == "series") code = cmd_series(buffered);
    else code = cmd_verify(buffered);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardRailError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuardRail;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  out << buffer.str();
  out.flush();
  return code;
}

}  // namespace ewb::cli
