#pragma once

#include <string>
#include <vector>

namespace quasicut {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic summary, safe for golden output
  double seconds = 0.0;  // wall time; callers that need byte-stable output drop it
};

struct VerifyOptions {
  int trials = 100000;   // Monte Carlo trials for the embedding cross-check
  std::string cli_path;  // binary probed by the determinism check
};

// The ten acceptance checks, in order, over internally generated
// corpora with pinned seeds. Every tolerance is pinned here, not
// configurable.
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace quasicut
