#pragma once

#include <string>

#include "gkz/jsonio.hpp"
#include "gkz/verify.hpp"

namespace gkz {

// Exit codes: 0 success, 1 input error, 2 mathematical precondition
// failure, 3 verification failure.
struct JobConfig {
  std::string command;
  std::string input_path;
  std::string output_path;
  std::string kind = "laplace";
  std::string only;
  double quad_tol = 1e-8;
  double series_tol = 1e-10;
  long truncation_order = 24;
  unsigned long seed = 20260809;
  int jobs = 1;
  bool tol_overridden = false;
};

json run_triangulate(const JobConfig& cfg);
json run_analyze(const JobConfig& cfg);
json run_verify(const JobConfig& cfg);
json run_oracle(const JobConfig& cfg);

// Full command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace gkz
