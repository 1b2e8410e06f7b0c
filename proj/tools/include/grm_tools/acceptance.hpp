#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grm::tools {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool full = false;            // criterion 11 over the whole search spaces
  bool allow_long_run = false;  // required with full
  int threads = 1;
  std::string checkpoint_dir;   // per-space checkpoints for the full searches
};

// Runs criteria 1..11, printing one PASS/FAIL line per criterion to `log` as
// it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& log);

}  // namespace grm::tools
