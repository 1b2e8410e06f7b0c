#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "grm_tools/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-11", "grm_acceptance"};
  std::string profile = "quick";
  grm::tools::AcceptanceOptions opts;
  app.add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  app.add_flag("--allow-long-run", opts.allow_long_run);
  app.add_option("--threads", opts.threads)->check(CLI::PositiveNumber);
  app.add_option("--checkpoint-dir", opts.checkpoint_dir);
  CLI11_PARSE(app, argc, argv);
  opts.full = profile == "full";
  if (opts.full && !opts.allow_long_run) {
    std::cerr << "--profile full needs --allow-long-run\n";
    return 2;
  }
  const auto results = grm::tools::run_acceptance(opts, std::cout);
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == std::ptrdiff_t(results.size()) ? 0 : 1;
}
