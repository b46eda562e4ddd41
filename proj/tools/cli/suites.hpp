#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "cli/report.hpp"

namespace ewb::cli {

inline constexpr std::array<std::string_view, 6> kSuiteNames = {"all",     "eulerian", "twosided",
                                                                 "boxes",   "hopping",  "gessel"};

struct SuiteOptions {
  std::optional<int> n_max;  ///< each suite has its own default and caps its enumerations
  std::size_t shards = 1;
  bool inject_failure = false;  ///< appends a check that always fails
};

/// Throws InvalidInput for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace ewb::cli
