#pragma once

// Subcommand dispatch shared by the CLI and tests. JSON is canonical; text
// and CSV are views of the same data.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ekr/certificate.hpp"
#include "ekr/characters.hpp"
#include "ekr/group.hpp"

namespace ekr::report {

enum class Format { kJson, kCsv, kText };
Format parse_format(const std::string& s);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  std::string subcommand;  // spectrum weights lp bounds construct search gram verify reproduce
  group::Family family = group::Family::kGL;
  int q = 3;
  std::string weights = "unit";  // unit | table | lp | file
  std::string weights_file;
  std::string construction;  // construct: singer line agl-cycle block pgl-2int agl-lift psl-stab
  int line = -1;             // construct line: projective index, default q
  std::string mode = "auto";  // search: coclique | clique | 2int | auto
  std::string reduction = "classes";
  double budget_seconds = 60.0;
  Format format = Format::kJson;
  std::string output;       // certificate or report path; empty = stdout only
  std::string input;        // verify: certificate path
  std::vector<int> q_list;  // reproduce
  bool q_list_given = false;
  std::uint64_t central_seed = chars::kCentralCharacterSeed;
  std::uint64_t sample_seed = cert::kSampleSeed;
};

/// Runs one subcommand, writing the report to `out`. Returns an exit code;
/// usage errors are reported as kExitUsage with the message on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ekr::report
