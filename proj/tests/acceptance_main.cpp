// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "ekr/acceptance.hpp"

int main(int argc, char** argv) {
  ekr::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--budget" && i + 1 < argc) {
      options.search_budget_seconds = std::atof(argv[++i]);
    } else if (arg == "--long-budget" && i + 1 < argc) {
      options.long_search_budget_seconds = std::atof(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      options.only.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: ekr_acceptance [--budget S] [--long-budget S] [--only N]...\n";
      return 1;
    }
  }
  options.on_done = [](const ekr::acceptance::Criterion& c) {
    std::cout << ekr::acceptance::summary_line(c) << std::endl;
  };
  const auto results = ekr::acceptance::reproduce_all(options);
  int failed = 0;
  for (const auto& c : results) failed += c.pass() ? 0 : 1;
  std::cout << fmt::format("{} of {} criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 2;
}
