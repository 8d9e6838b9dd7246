#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gkz {

struct CheckResult {
  int criterion = 0;
  std::string name;  // short id for --only filtering
  bool pass = false;
  bool skipped = false;
  double measured = 0.0;   // worst measured quantity
  double threshold = 0.0;
  std::string paper_anchor;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::string only;                     // run only the named check
  std::optional<double> tol_override;   // replaces the pochhammer k=2 tolerance
  unsigned long seed = 20260809;
  int jobs = 1;
};

// Runs the acceptance criteria; prints one pass/fail line per criterion to
// `progress` when given.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          std::ostream* progress = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gkz
