#include "invtree/verify.hpp"

#include "json.hpp"

#include <cstdio>

namespace invtree {

namespace {

std::string milliseconds(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string status(bool passed) { return passed ? "pass" : "fail"; }

}  // namespace

std::string report_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j{{"name", c.name}, {"status", status(c.passed)}, {"sizes", c.sizes}, {"detail", c.detail}};
    if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
    if (include_timing) j["elapsed_ms"] = milliseconds(c.elapsed_ms);
    checks.push_back(std::move(j));
  }
  nlohmann::json j{{"suite", report.suite}, {"kind", report.kind}, {"status", status(report.passed())}, {"checks", checks}};
  if (include_timing) j["elapsed_ms"] = milliseconds(report.elapsed_ms);
  return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
  std::string out = "check,status,sizes,counterexample,detail\n";
  for (const auto& c : report.checks) {
    out += csv_field(c.name) + ',' + status(c.passed) + ',' + csv_field(c.sizes) + ',' + csv_field(c.counterexample) + ',' +
           csv_field(c.detail) + '\n';
  }
  return out;
}

std::string report_text(const VerificationReport& report, bool include_timing) {
  std::string out;
  for (const auto& c : report.checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + " [" + c.sizes + "]";
    if (!c.counterexample.empty()) out += " counterexample: " + c.counterexample;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    if (include_timing) out += " " + milliseconds(c.elapsed_ms) + " ms";
    out += '\n';
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed;
  out += report.suite + " (" + report.kind + "): " + std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
         " checks passed";
  if (include_timing) out += " in " + milliseconds(report.elapsed_ms) + " ms";
  return out + '\n';
}

std::string sequence_json(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
  return out + "]\n";
}

std::string sequence_csv(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(i + 1) + ',' + values[i].str() + '\n';
  return out;
}

std::string triangle_json(const CountTriangle& triangle) {
  std::string out = "[";
  for (std::size_t n = 0; n < triangle.size(); ++n) {
    out += n ? ",[" : "[";
    for (std::size_t k = 0; k < triangle[n].size(); ++k) out += (k ? "," : "") + triangle[n][k].str();
    out += ']';
  }
  return out + "]\n";
}

std::string triangle_csv(const CountTriangle& triangle) {
  std::string out;
  for (std::size_t n = 0; n < triangle.size(); ++n) {
    for (std::size_t k = 0; k < triangle[n].size(); ++k) {
      out += std::to_string(n) + ',' + std::to_string(k) + ',' + triangle[n][k].str() + '\n';
    }
  }
  return out;
}

}  // namespace invtree
