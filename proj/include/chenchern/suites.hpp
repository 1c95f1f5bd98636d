#ifndef CHENCHERN_SUITES_HPP
#define CHENCHERN_SUITES_HPP

/// Verification suites: each acceptance criterion as a self-contained check,
/// grouped into named suites for the command-line verifier.

#include <cstdint>
#include <string>
#include <vector>

#include "chenchern/bismut_chern.hpp"
#include "chenchern/serialize.hpp"

namespace chenchern {

struct VerifyConfig {
  std::uint64_t seed = 7;
  int truncate = 4;            // chain lengths n <= truncate in the identity checks
  int growth_terms = 20;       // N in the entire growth bound
  double tolerance = 1e-6;     // moving-plot Bismut-Chern comparisons
  double constant_tolerance = 1e-9;
  double seminorm_base = 1.0;
  BchSettings bch;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteResult {
  std::string suite;
  bool passed = false;
  std::vector<CheckResult> checks;
};

/// Criteria 1..9.
CheckResult run_criterion(int k, const VerifyConfig& cfg);
int criterion_count();
std::string criterion_title(int k);

/// complex, chern, chen, degenerate, growth, bch.
const std::vector<std::string>& suite_names();
/// Criteria covered by a suite; throws std::invalid_argument on unknown names.
std::vector<int> suite_criteria(const std::string& suite);
SuiteResult run_suite(const std::string& suite, const VerifyConfig& cfg);
/// Runs the suites concurrently; results come back in the order requested.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& suites, const VerifyConfig& cfg);

io::Json report_json(const std::vector<SuiteResult>& results, const VerifyConfig& cfg);

}  // namespace chenchern

#endif  // CHENCHERN_SUITES_HPP
