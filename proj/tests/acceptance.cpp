// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <cstdio>

#include "chenchern/suites.hpp"

int main() {
  const chenchern::VerifyConfig cfg;
  bool all = true;
  for (int k = 1; k <= chenchern::criterion_count(); ++k) {
    const chenchern::CheckResult r = chenchern::run_criterion(k, cfg);
    std::printf("criterion %d: %s  %s (%.1f s) -- %s\n", k, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
