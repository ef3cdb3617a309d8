#include <doctest.h>

#include <algorithm>

#include "ekr/bitgraph.hpp"
#include "ekr/error.hpp"
#include "ekr/group.hpp"
#include "ekr/search.hpp"

using ekr::BitGraph;
using ekr::group::Family;
using ekr::group::GroupContext;
namespace search = ekr::search;

namespace {

BitGraph cycle(int n) {
  BitGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

BitGraph petersen() {
  BitGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Exhaustive subset enumeration; only for tiny graphs.
int brute_alpha(const BitGraph& g) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    bool ok = true;
    for (int i = 0; i < g.size() && ok; ++i)
      for (int j = i + 1; j < g.size() && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

search::SearchOptions with(search::Reduction r) {
  search::SearchOptions o;
  o.reduction = r;
  o.budget_seconds = 0;
  return o;
}

}  // namespace

TEST_CASE("small graphs with known clique and independence numbers") {
  const auto c5 = cycle(5);
  CHECK(search::max_clique(c5, with(search::Reduction::kNone)).size() == 2);
  CHECK(search::max_coclique(c5, with(search::Reduction::kNone)).size() == 2);
  const auto p = petersen();
  const auto alpha = search::max_coclique(p, with(search::Reduction::kIdentity));
  CHECK(alpha.size() == 4);
  CHECK(alpha.optimal);
  CHECK(search::check_set(p, alpha.best, false));
  CHECK(search::max_clique(p, with(search::Reduction::kNone)).size() == 2);
  BitGraph k6(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.add_edge(i, j);
  CHECK(search::max_clique(k6).size() == 6);
  CHECK(search::max_coclique(k6).size() == 1);
}

TEST_CASE("coclique search agrees with subset enumeration") {
  // Deterministic pseudo-random graphs on up to 14 vertices.
  unsigned state = 12345;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 + trial % 7;
    BitGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        state = state * 1103515245u + 12345u;
        if ((state >> 16) % 3 == 0) g.add_edge(i, j);
      }
    const auto out = search::max_coclique(g, with(search::Reduction::kNone));
    CHECK(out.size() == brute_alpha(g));
    CHECK(search::check_set(g, out.best, false));
  }
}

TEST_CASE("symmetry reductions do not change the answer on derangement graphs") {
  const std::pair<Family, int> cases[] = {{Family::kGL, 3}, {Family::kSL, 3}, {Family::kSL, 4},
                                          {Family::kPGL, 4}, {Family::kPGL, 5}, {Family::kAGL, 2},
                                          {Family::kPSL, 5}};
  for (auto [fam, q] : cases) {
    CAPTURE(q);
    CAPTURE(ekr::group::family_name(fam));
    const auto ctx = GroupContext::build(fam, q);
    const auto g = ekr::group::derangement_graph(ctx);
    const int plain = search::max_coclique(g, with(search::Reduction::kNone)).size();
    const auto classes = search::max_coclique_cayley(ctx, g, with(search::Reduction::kClasses));
    CHECK(classes.optimal);
    CHECK(classes.size() == plain);
    CHECK(search::max_coclique(g, with(search::Reduction::kIdentity)).size() == plain);
    CHECK(search::check_set(g, classes.best, false));
  }
}

TEST_CASE("maximum intersecting sets in small projective groups") {
  // Point stabilizers have size q(q-1) in PGL(2,q).
  for (int q : {3, 4, 5}) {
    const auto ctx = GroupContext::build(Family::kPGL, q);
    const auto out = search::max_coclique_cayley(ctx, ekr::group::derangement_graph(ctx),
                                                 with(search::Reduction::kClasses));
    CHECK(out.size() == q * (q - 1));
  }
}

TEST_CASE("2-intersecting search in PGL(2,q)") {
  const std::pair<int, int> known[] = {{3, 2}, {4, 4}, {5, 5}};
  for (auto [q, want] : known) {
    CAPTURE(q);
    const auto ctx = GroupContext::build(Family::kPGL, q);
    const auto out = search::max_two_intersecting(ctx, with(search::Reduction::kClasses));
    CHECK(out.optimal);
    CHECK(out.size() == want);
  }
  CHECK_THROWS_AS(search::max_two_intersecting(GroupContext::build(Family::kGL, 3)), ekr::Error);
}

TEST_CASE("floor sets seed the incumbent and are validated") {
  const auto p = petersen();
  auto o = with(search::Reduction::kNone);
  o.floor = {0, 2, 8, 9};
  REQUIRE(search::check_set(p, o.floor, false));
  const auto out = search::max_coclique(p, o);
  CHECK(out.size() == 4);
  CHECK(out.log.front().best == 4);
  o.floor = {0, 1};
  CHECK_THROWS_AS(search::max_coclique(p, o), ekr::Error);
  o.floor = {0, 42};
  CHECK_THROWS_AS(search::max_coclique(p, o), ekr::Error);
  CHECK_THROWS_AS(search::max_coclique(p, with(search::Reduction::kClasses)), ekr::Error);
}

TEST_CASE("a tiny budget yields a flagged lower bound") {
  const auto ctx = GroupContext::build(Family::kPGL, 13);
  search::SearchOptions o;
  o.reduction = search::Reduction::kIdentity;
  o.budget_seconds = 1e-4;
  const auto out = search::max_two_intersecting(ctx, o);
  CHECK_FALSE(out.optimal);
  CHECK(out.size() >= (3 * 13 - 5) / 2);  // the construction floor
}

TEST_CASE("search output is deterministic") {
  const auto ctx = GroupContext::build(Family::kSL, 4);
  const auto g = ekr::group::derangement_graph(ctx);
  const auto a = search::max_coclique_cayley(ctx, g, with(search::Reduction::kClasses));
  const auto b = search::max_coclique_cayley(ctx, g, with(search::Reduction::kClasses));
  CHECK(a.best == b.best);
  CHECK(search::to_json(a) == search::to_json(b));
}
