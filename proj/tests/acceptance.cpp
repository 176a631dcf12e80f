// Acceptance table: one PASS/FAIL/SKIP line per criterion, details indented.

#include <iostream>

#include "CLI11.hpp"

#include "ncclique/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance table"};
  ncc::SuiteOptions opts;
  std::vector<std::string> rows;
  app.add_option("--budget", opts.budget_seconds);
  app.add_option("--rows", rows)->delimiter(',');
  app.add_option("--cache-dir", opts.cache_dir);
  app.add_option("--seed", opts.sample_seed);
  CLI11_PARSE(app, argc, argv);
  opts.rows.insert(rows.begin(), rows.end());
  return ncc::run_acceptance(opts, std::cout).ok() ? 0 : 1;
}
