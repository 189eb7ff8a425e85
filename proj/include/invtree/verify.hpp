#pragma once

// Verification suites that cross-check the modules against each other, the
// conjecture harness for AV(23-1-4), and byte-stable JSON / CSV export.

#include "invtree/bigint.hpp"
#include "invtree/series.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string sizes;           // e.g. "n<=9"
  std::string counterexample;  // serialized object; set whenever passed is false
  std::string detail;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::string kind = "verification";  // "conjecture evidence" for the harness
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool passed() const;
};

struct VerifyOptions {
  int jobs = 1;
  /// Called from worker threads when a check finishes (progress reporting).
  std::function<void(const CheckResult&)> on_check;
};

/// characterizations, growths, bijections, series, all.
const std::vector<std::string>& suite_names();
/// Runs every check of the suite; results keep declaration order whatever
/// the completion order.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options = {});

/// RTL-minima distribution of AV_n(23-1-4) against c_{n,k} for n = 1..n_max.
VerificationReport conjecture_23_1_4_report(int n_max, const VerifyOptions& options = {});
/// Number of permutations in AV_n(23-1-4) with k RTL minima, k = 0..n.
std::vector<std::uint64_t> rtl_minima_distribution_23_1_4(int n);

// Export. Output is byte-stable: keys sorted, no locale formatting, no
// trailing whitespace; a final newline is added.

std::string report_json(const VerificationReport& report, bool include_timing = false);
std::string report_csv(const VerificationReport& report);
std::string report_text(const VerificationReport& report, bool include_timing = false);
std::string sequence_json(const std::vector<BigInt>& values);
std::string sequence_csv(const std::vector<BigInt>& values);  // "n,value" rows from n = 1
std::string triangle_json(const CountTriangle& triangle);
std::string triangle_csv(const CountTriangle& triangle);      // "n,k,value" rows

}  // namespace invtree
