#include "ekr/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include <fmt/format.h>

#include "ekr/constructions.hpp"
#include "ekr/error.hpp"

namespace ekr::search {
namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

// Shared incumbent and budget across the subproblems of one search.
struct State {
  Clock::time_point start = Clock::now();
  double budget = 0.0;
  bool timed_out = false;
  long long nodes = 0;
  std::vector<int> best;
  std::vector<LogEntry> log;

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }

  void record(std::vector<int> set) {
    std::sort(set.begin(), set.end());
    best = std::move(set);
    log.push_back({nodes, elapsed(), static_cast<int>(best.size())});
  }
};

// Clique search on a dense local graph. Local vertex i stands for global
// vertex labels[i]; local order is descending degree, ties by global id.
class Solver {
 public:
  Solver(State& state, std::vector<int> prefix, std::vector<int> labels, const std::vector<Bits>& adj)
      : state_(state), prefix_(std::move(prefix)) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) {
      for (auto w : adj[i]) deg[i] += std::popcount(w);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return deg[a] != deg[b] ? deg[a] > deg[b] : labels[a] < labels[b];
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    n_ = n;
    words_ = (n + 63) / 64;
    labels_.resize(n);
    adj_.assign(n, Bits(words_, 0));
    for (int i = 0; i < n; ++i) {
      labels_[pos[i]] = labels[i];
      for (int w = 0; w < static_cast<int>(adj[i].size()); ++w) {
        for (auto bits = adj[i][w]; bits; bits &= bits - 1) {
          const int j = w * 64 + std::countr_zero(bits);
          adj_[pos[i]][pos[j] >> 6] |= std::uint64_t{1} << (pos[j] & 63);
        }
      }
    }
  }

  void run() {
    Bits p(words_, 0);
    for (int i = 0; i < n_; ++i) p[i >> 6] |= std::uint64_t{1} << (i & 63);
    current_ = prefix_;
    if (current_.size() > state_.best.size()) state_.record(current_);
    if (n_ > 0) expand(p);
  }

 private:
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  void expand(Bits& p) {
    if ((++state_.nodes & 1023) == 0 && state_.budget > 0 && state_.elapsed() > state_.budget) {
      state_.timed_out = true;
    }
    if (state_.timed_out) return;

    // Greedy sequential colouring in local order.
    std::vector<int> order;
    std::vector<int> colour;
    Bits u = p;
    int k = 0;
    while (!empty(u)) {
      ++k;
      Bits q = u;
      for (int w = 0; w < words_; ++w) {
        while (q[w]) {
          const int v = w * 64 + std::countr_zero(q[w]);
          u[w] &= ~(std::uint64_t{1} << (v & 63));
          q[w] &= ~(std::uint64_t{1} << (v & 63));
          for (int x = w; x < words_; ++x) q[x] &= ~adj_[v][x];
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }

    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + colour[i] <= state_.best.size()) return;
      const int v = order[i];
      current_.push_back(labels_[v]);
      Bits next(words_);
      for (int w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (empty(next)) {
        if (current_.size() > state_.best.size()) state_.record(current_);
      } else {
        expand(next);
      }
      current_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      if (state_.timed_out) return;
    }
  }

  State& state_;
  std::vector<int> prefix_;
  std::vector<int> current_;
  int n_ = 0;
  int words_ = 0;
  std::vector<int> labels_;
  std::vector<Bits> adj_;
};

// Local adjacency on `labels`: g's edges, or its non-edges when `complement`.
std::vector<Bits> local_graph(const BitGraph& g, const std::vector<int>& labels, bool complement) {
  const int n = static_cast<int>(labels.size());
  const int words = (n + 63) / 64;
  std::vector<Bits> adj(n, Bits(words, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(labels[i], labels[j]) != complement) {
        adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
  }
  return adj;
}

void solve(State& state, const BitGraph& g, std::vector<int> prefix, std::vector<int> labels, bool complement) {
  if (prefix.size() + labels.size() <= state.best.size()) return;
  const auto adj = local_graph(g, labels, complement);
  Solver(state, std::move(prefix), std::move(labels), adj).run();
}

void seed(State& state, const BitGraph& g, const SearchOptions& options, bool want_clique) {
  state.budget = options.budget_seconds;
  if (options.floor.empty()) return;
  for (int v : options.floor) {
    if (v < 0 || v >= g.size()) throw Error(ErrorKind::kInvalidInput, "floor set has an out-of-range vertex");
  }
  if (!check_set(g, options.floor, want_clique)) {
    throw Error(ErrorKind::kInvalidInput, "floor set does not have the searched property");
  }
  state.record(options.floor);
}

SearchOutcome finish(State& state) {
  SearchOutcome out;
  out.best = std::move(state.best);
  out.optimal = !state.timed_out;
  out.nodes = state.nodes;
  out.seconds = state.elapsed();
  out.log = std::move(state.log);
  return out;
}

SearchOutcome search_graph(const BitGraph& g, const SearchOptions& options, bool want_clique) {
  if (options.reduction == Reduction::kClasses) {
    throw Error(ErrorKind::kInvalidInput, "class reduction needs a group context");
  }
  State state;
  seed(state, g, options, want_clique);
  const bool complement = !want_clique;
  if (g.size() == 0) return finish(state);
  if (options.reduction == Reduction::kIdentity) {
    std::vector<int> labels;
    for (int v = 1; v < g.size(); ++v)
      if (g.adjacent(0, v) == want_clique) labels.push_back(v);
    solve(state, g, {0}, std::move(labels), complement);
  } else {
    std::vector<int> labels(g.size());
    std::iota(labels.begin(), labels.end(), 0);
    solve(state, g, {}, std::move(labels), complement);
  }
  return finish(state);
}

}  // namespace

bool check_set(const BitGraph& g, const std::vector<int>& set, bool want_clique) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.adjacent(set[i], set[j]) != want_clique) return false;
    }
  return true;
}

SearchOutcome max_clique(const BitGraph& g, const SearchOptions& options) {
  return search_graph(g, options, true);
}

SearchOutcome max_coclique(const BitGraph& g, const SearchOptions& options) {
  return search_graph(g, options, false);
}

SearchOutcome max_coclique_cayley(const group::GroupContext& ctx, const BitGraph& g, const SearchOptions& options) {
  if (g.size() != ctx.order()) throw Error(ErrorKind::kInvalidInput, "graph and group sizes differ");
  if (options.reduction != Reduction::kClasses) return max_coclique(g, options);

  // Conjugation fixes the identity and preserves the graph, so a maximum
  // coclique through the identity can be moved to contain the representative
  // of the lowest-indexed class it meets; later classes only follow it.
  State state;
  seed(state, g, options, false);
  const int id = ctx.identity();
  if (state.best.empty()) state.record({id});
  const auto& classes = ctx.classes();
  for (std::size_t c = 0; c < classes.size() && !state.timed_out; ++c) {
    const int rep = classes[c].representative;
    if (rep == id || g.adjacent(id, rep)) continue;
    std::vector<int> labels;
    for (int v = 0; v < ctx.order(); ++v) {
      if (v == id || v == rep || ctx.class_of(v) < static_cast<int>(c)) continue;
      if (!g.adjacent(id, v) && !g.adjacent(rep, v)) labels.push_back(v);
    }
    solve(state, g, {id, rep}, std::move(labels), true);
  }
  return finish(state);
}

SearchOutcome max_two_intersecting(const group::GroupContext& ctx, SearchOptions options) {
  if (ctx.family() != group::Family::kPGL && ctx.family() != group::Family::kPSL) {
    throw Error(ErrorKind::kInvalidInput, "2-intersecting search needs PGL or PSL");
  }
  if (options.floor.empty() && ctx.family() == group::Family::kPGL && ctx.q() >= 3) {
    options.floor = constructions::pgl_two_intersecting(ctx).ids;
  }
  return max_coclique_cayley(ctx, group::two_fix_graph(ctx), options);
}

cert::Certificate to_certificate(const group::GroupContext& ctx, const SearchOutcome& out, cert::Kind kind) {
  return {ctx.family(), ctx.q(), kind, out.best,
          fmt::format("exact search: {} after {} nodes", out.optimal ? "optimal" : "lower bound", out.nodes)};
}

nlohmann::json to_json(const SearchOutcome& out) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& e : out.log) log.push_back({{"nodes", e.nodes}, {"best", e.best}});
  return {{"size", out.size()}, {"optimal", out.optimal}, {"nodes", out.nodes}, {"best", out.best}, {"log", log}};
}

}  // namespace ekr::search
