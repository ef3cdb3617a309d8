#pragma once

// The reproduction suite: nine criteria, each a list of itemized checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ekr::acceptance {

struct Item {
  std::string what;
  bool pass = false;
  std::string detail;  // observed vs expected
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Item> items;
  double seconds = 0.0;

  bool pass() const;
  int failures() const;
};

struct Options {
  /// Restricts every criterion to these q. nullopt keeps each criterion's
  /// own list; an empty list runs nothing.
  std::optional<std::vector<int>> q_list;
  double search_budget_seconds = 60.0;
  double long_search_budget_seconds = 1800.0;  // PGL(2,11)
  std::vector<int> only;                       // criterion ids; empty = all
  std::function<void(const Criterion&)> on_done;
};

std::vector<Criterion> reproduce_all(const Options& options = {});

/// "[PASS] 3 title (n items, t s)" or "[FAIL] ..." with failing items after.
std::string summary_line(const Criterion& c);
nlohmann::json to_json(const std::vector<Criterion>& cs);

}  // namespace ekr::acceptance
