#include <doctest.h>

#include "ekr/characters.hpp"
#include "ekr/group.hpp"
#include "ekr/lp.hpp"

using ekr::group::Family;
using ekr::group::GroupContext;
namespace lp = ekr::lp;

TEST_CASE("a two-variable LP solved by hand") {
  // max 3x + 2y  s.t.  -x - y >= -1 (x + y <= 1),  -x >= -1/2 doubled: -2x >= -1.
  lp::LPInstance inst;
  inst.objective = {3.0, 2.0};
  inst.rows = {{-1.0, -1.0}, {-2.0, 0.0}};
  inst.constraint_labels = {"sum", "x"};
  inst.variable_classes = {{1}, {2}};
  const auto r = lp::solve_lp(inst);
  REQUIRE(r.status == lp::LPStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(2.5));
  CHECK(r.weights[0] == doctest::Approx(0.5));
  CHECK(r.weights[1] == doctest::Approx(0.5));
  CHECK(r.max_violation < 1e-9);
}

TEST_CASE("free variables can go negative") {
  // max -x  s.t.  x >= -1.
  lp::LPInstance inst;
  inst.objective = {-1.0};
  inst.rows = {{1.0}};
  inst.constraint_labels = {"x"};
  inst.variable_classes = {{1}};
  const auto r = lp::solve_lp(inst);
  REQUIRE(r.status == lp::LPStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("unbounded LPs report a ray") {
  lp::LPInstance inst;
  inst.objective = {1.0, 0.0};
  inst.rows = {{1.0, 1.0}};
  inst.constraint_labels = {"r"};
  inst.variable_classes = {{1}, {2}};
  const auto r = lp::solve_lp(inst);
  CHECK(r.status == lp::LPStatus::kUnbounded);
  CHECK_FALSE(r.ray.empty());
}

TEST_CASE("AGL(2,q) LP optimum") {
  const std::pair<int, int> known[] = {{3, 5}, {4, 9}, {5, 9}};
  for (auto [q, want] : known) {
    CAPTURE(q);
    const auto g = GroupContext::build(Family::kAGL, q);
    const auto t = ekr::chars::character_table(g);
    const auto inst = lp::build_lp(g, t);
    const auto r = lp::solve_lp(inst);
    REQUIRE(r.status == lp::LPStatus::kOptimal);
    CHECK(r.objective == doctest::Approx(want).epsilon(1e-6));
    CHECK(r.max_violation < 1e-7);
    const auto w = lp::class_weights(g, inst, r);
    const auto check = lp::agl_rank3_check(g, w);
    CHECK(check.closed_forms_hold);
  }
}

TEST_CASE("LP weights reproduce the objective as the top eigenvalue") {
  const auto g = GroupContext::build(Family::kPGL, 5);
  const auto t = ekr::chars::character_table(g);
  const auto inst = lp::build_lp(g, t);
  const auto r = lp::solve_lp(inst);
  REQUIRE(r.status == lp::LPStatus::kOptimal);
  const auto w = lp::class_weights(g, inst, r);
  double top = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) top += w[k] * g.classes()[k].size;
  CHECK(top == doctest::Approx(r.objective));
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!g.classes()[k].is_derangement) CHECK(w[k] == 0.0);
  const auto ceiling = lp::lp_ceiling_check(g, t, r);
  CHECK(ceiling.within_ceiling);
}
