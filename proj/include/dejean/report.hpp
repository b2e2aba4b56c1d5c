#pragma once

// Text and JSON renderings of a VerificationReport.

#include <cstdio>
#include <string>

#include "json.hpp"

#include "dejean/verifier.hpp"

namespace dejean {

/// {"n", "r", "overall", "checks": [{"name", "pass", "witness", "ms"}]}
inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"ms", c.ms}});
  return {{"n", report.n}, {"r", report.r}, {"overall", report.overall()}, {"checks", std::move(checks)}};
}

inline constexpr const char* kReportHeader =
    "machine-checked: the eight facts below. Not executed: the lifting step from a kernel\n"
    "repetition to a non-markable excess, which the kernel bound summarises; with no kernel\n"
    "repetition in h^2(0110) it has nothing to act on. The argument composing these facts is prose.\n";

inline std::string to_text(const VerificationReport& report, bool header = true) {
  std::string out;
  out += "n=" + std::to_string(report.n) + " r=" + std::to_string(report.r) +
         " overall=" + (report.overall() ? "PASS" : "FAIL") + "\n";
  if (header) out += kReportHeader;
  for (const auto& c : report.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.ms);
    out += std::string("  ") + (c.pass ? "PASS " : "FAIL ") + c.name + " (" + ms + " ms): " + c.witness + "\n";
  }
  return out;
}

}  // namespace dejean
