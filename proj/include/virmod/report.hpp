#ifndef VIRMOD_REPORT_HPP
#define VIRMOD_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace virmod {

using Json = nlohmann::ordered_json;

/// Structured pass/fail record of one suite run. All rationals inside are
/// serialized as exact "p/q" strings.
struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  long total_checks = 0;

  struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
  };
  std::vector<Failure> failures;

  Json derived = Json::object();        // measured constants etc.
  std::vector<std::string> notes;       // discrepancy flags, annotations

  bool passed() const { return failures.empty(); }
  void fail(std::string input, std::string expected, std::string actual) {
    failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }

  Json to_json() const;
};

/// Top-level document emitted by the CLI: self-contained, reproducible from
/// the embedded seed and parameters.
struct ReportDocument {
  std::string tool_version;
  std::uint64_t seed = 0;
  Json options = Json::object();
  std::vector<VerificationReport> suites;

  bool all_passed() const;
  Json to_json() const;
  std::string dump() const;  // stable two-space indentation
};

}  // namespace virmod

#endif
