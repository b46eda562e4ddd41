#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "ewb/errors.hpp"

namespace ewb::cli {

void VerificationReport::add(std::string description, bool pass, std::string detail) {
  checks.push_back({std::move(description), pass, std::move(detail)});
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& c : other.checks) checks.push_back({"[" + other.suite + "] " + c.description, c.pass, c.detail});
  elapsed += other.elapsed;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json report_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"description", c.description}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return Json{{"suite", report.suite},
              {"status", report.pass() ? "pass" : "fail"},
              {"exit_status", report.exit_status()},
              {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("suite") || !j.contains("checks")) {
    throw InvalidInput("not a verification report");
  }
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    const auto status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw InvalidInput("check status must be pass or fail");
    r.add(c.at("description").get<std::string>(), status == "pass", c.value("detail", std::string{}));
  }
  return r;
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.description;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (!c.pass) ++failed;
  }
  out << "suite " << report.suite << ": " << report.checks.size() - failed << '/' << report.checks.size()
      << " checks passed\n";
  return out.str();
}

}  // namespace ewb::cli
