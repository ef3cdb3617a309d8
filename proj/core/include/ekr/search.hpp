#pragma once

// Exact maximum clique by bitset branch and bound with greedy colouring
// bounds. Coclique searches run as clique searches on the complement.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/bitgraph.hpp"
#include "ekr/certificate.hpp"
#include "ekr/group.hpp"

namespace ekr::search {

enum class Reduction {
  kNone,
  kIdentity,  // fix vertex 0 (vertex-transitive graphs)
  kClasses,   // also fix the second vertex to a class representative
};

struct SearchOptions {
  double budget_seconds = 60.0;  // <= 0 means unlimited
  Reduction reduction = Reduction::kIdentity;
  std::vector<int> floor;  // known solution, used as the initial incumbent
};

struct LogEntry {
  long long nodes = 0;
  double seconds = 0.0;
  int best = 0;
};

struct SearchOutcome {
  std::vector<int> best;  // sorted vertex ids
  bool optimal = false;   // false: budget ran out, best is a lower bound
  long long nodes = 0;
  double seconds = 0.0;
  std::vector<LogEntry> log;  // one entry per incumbent improvement

  int size() const { return static_cast<int>(best.size()); }
};

/// Max clique of `g`. Reduction must be kNone or kIdentity here; kIdentity
/// assumes vertex transitivity.
SearchOutcome max_clique(const BitGraph& g, const SearchOptions& options = {});

/// Max coclique of `g` as a clique of the complement.
SearchOutcome max_coclique(const BitGraph& g, const SearchOptions& options = {});

/// Max coclique of a Cayley graph on ctx whose connection set is a union of
/// conjugacy classes (vertex = element id). Honours all three reductions.
SearchOutcome max_coclique_cayley(const group::GroupContext& ctx, const BitGraph& g,
                                  const SearchOptions& options = {});

/// Largest 2-intersecting set of PGL or PSL. For PGL the floor defaults to
/// the explicit construction.
SearchOutcome max_two_intersecting(const group::GroupContext& ctx, SearchOptions options = {});

/// True iff `set` is a clique (want_clique) or coclique of `g`.
bool check_set(const BitGraph& g, const std::vector<int>& set, bool want_clique);

cert::Certificate to_certificate(const group::GroupContext& ctx, const SearchOutcome& out, cert::Kind kind);

nlohmann::json to_json(const SearchOutcome& out);

}  // namespace ekr::search
