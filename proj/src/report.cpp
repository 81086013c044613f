#include "virmod/report.hpp"

#include "virmod/version.hpp"

namespace virmod {

Json VerificationReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  j["total_checks"] = total_checks;
  j["passed"] = passed();
  Json fs = Json::array();
  for (const auto& f : failures) {
    Json jf;
    jf["input"] = f.input;
    jf["expected"] = f.expected;
    jf["actual"] = f.actual;
    fs.push_back(jf);
  }
  j["failures"] = fs;
  if (!derived.empty()) j["derived"] = derived;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

bool ReportDocument::all_passed() const {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

Json ReportDocument::to_json() const {
  Json j;
  j["tool_version"] = tool_version.empty() ? std::string(kVersion) : tool_version;
  j["seed"] = seed;
  j["options"] = options;
  Json arr = Json::array();
  for (const auto& s : suites) arr.push_back(s.to_json());
  j["suites"] = arr;
  j["all_passed"] = all_passed();
  return j;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace virmod
