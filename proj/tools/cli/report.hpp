#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "ewb/serialize.hpp"

namespace ewb::cli {

struct Check {
  std::string description;
  bool pass = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::chrono::milliseconds elapsed{0};  ///< not serialized; output must be reproducible

  void add(std::string description, bool pass, std::string detail = {});
  /// Appends another report's checks, prefixing each with "[suite] ".
  void absorb(const VerificationReport& other);
  bool pass() const;
  int exit_status() const { return pass() ? 0 : 1; }
};

/// {"suite": ..., "status": "pass"|"fail", "exit_status": 0|1,
///  "checks": [{"description", "status", "detail"}, ...]}
Json report_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

/// One "PASS  description" or "FAIL  description: detail" line per check,
/// then a summary line.
std::string report_text(const VerificationReport& report);

}  // namespace ewb::cli
