#include <doctest.h>

#include <algorithm>
#include <set>

#include "ekr/certificate.hpp"
#include "ekr/constructions.hpp"
#include "ekr/group.hpp"

using ekr::group::Family;
using ekr::group::GroupContext;
using ekr::group::Mat2;
using ekr::group::Vec2;
namespace con = ekr::constructions;

namespace {

// Nonzero vectors on which two GL matrices agree, computed from the matrices alone.
int gl_agreement(const GroupContext& gl, int g, int h) {
  const auto& f = gl.field();
  const int q = gl.q();
  int n = 0;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      n += ekr::group::mat_apply(f, gl.matrix(g), {x, y}) == ekr::group::mat_apply(f, gl.matrix(h), {x, y});
    }
  return n;
}

bool is_subgroup(const GroupContext& ctx, const std::vector<int>& s) {
  const std::set<int> in(s.begin(), s.end());
  for (int a : s)
    for (int b : s)
      if (!in.count(ctx.multiply(a, ctx.inverse(b)))) return false;
  return true;
}

}  // namespace

TEST_CASE("Singer subgroup is a cyclic regular clique") {
  for (int q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    const auto gl = GroupContext::build(Family::kGL, q);
    const auto s = con::singer_clique(gl);
    REQUIRE(s.size() == static_cast<std::size_t>(q * q - 1));
    CHECK(is_subgroup(gl, s.ids));
    for (std::size_t i = 0; i < s.ids.size(); ++i)
      for (std::size_t j = i + 1; j < s.ids.size(); ++j) CHECK(gl_agreement(gl, s.ids[i], s.ids[j]) == 0);
    const int w = gl.find(con::singer_generator(gl));
    CHECK(con::generated_subgroup(gl, {w}).size() == s.size());
  }
}

TEST_CASE("line-stabilizer coclique") {
  for (int q : {3, 4, 5}) {
    CAPTURE(q);
    const auto gl = GroupContext::build(Family::kGL, q);
    for (int line : {0, q}) {
      const auto s = con::line_stabilizer_coclique(gl, line);
      REQUIRE(s.size() == static_cast<std::size_t>(q * (q - 1)));
      CHECK(is_subgroup(gl, s.ids));
      for (std::size_t i = 0; i < s.ids.size(); ++i)
        for (std::size_t j = i + 1; j < s.ids.size(); ++j) CHECK(gl_agreement(gl, s.ids[i], s.ids[j]) > 0);
      CHECK_FALSE(con::equals_canonical_set(gl, s.ids));
    }
  }
}

TEST_CASE("point stabilizers are canonical") {
  const auto gl = GroupContext::build(Family::kGL, 3);
  std::vector<int> stab;
  for (int g = 0; g < gl.order(); ++g)
    if (gl.image(g, 0) == 0) stab.push_back(g);
  CHECK(con::equals_canonical_set(gl, stab));
}

TEST_CASE("AGL block constructions") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const auto agl = GroupContext::build(Family::kAGL, q);
    const auto clique = con::agl_cycle_clique(agl);
    CHECK(clique.size() == static_cast<std::size_t>(q + 1));
    CHECK(ekr::cert::verify(clique, agl).ok);
    const auto block = con::block_stabilizer(agl);
    CHECK(is_subgroup(agl, block.ids));
    for (int g : block.ids) CHECK(agl.block_image(g, 0) == 0);
    const auto t = con::translation_subgroup(agl);
    CHECK(t.size() == static_cast<std::size_t>(q * q));
    CHECK(is_subgroup(agl, t));
  }
}

TEST_CASE("PGL 2-intersecting construction") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const auto pgl = GroupContext::build(Family::kPGL, q);
    const auto s = con::pgl_two_intersecting(pgl);
    CHECK(s.size() == static_cast<std::size_t>(q % 2 ? (3 * q - 5) / 2 : (3 * q - 4) / 2));
    CHECK(std::count(s.ids.begin(), s.ids.end(), pgl.identity()) == 1);
    for (std::size_t i = 0; i < s.ids.size(); ++i)
      for (std::size_t j = i + 1; j < s.ids.size(); ++j) {
        int agree = 0;
        for (int p = 0; p <= q; ++p) agree += pgl.image(s.ids[i], p) == pgl.image(s.ids[j], p);
        CHECK(agree >= 2);
      }
  }
}

TEST_CASE("AGL lift of the PGL construction") {
  const auto pgl = GroupContext::build(Family::kPGL, 5);
  const auto agl = GroupContext::build(Family::kAGL, 5);
  const auto lift = con::agl_lift(agl, pgl, con::pgl_two_intersecting(pgl));
  CHECK(lift.size() == 500u);
  CHECK(ekr::cert::verify(lift, agl).ok);
}

TEST_CASE("PSL setwise stabilizer of two points") {
  for (int q : {5, 9, 13}) {
    CAPTURE(q);
    const auto psl = GroupContext::build(Family::kPSL, q);
    const auto s = con::psl_setwise_stabilizer(psl);
    CHECK(s.size() == static_cast<std::size_t>(q - 1));
    CHECK(is_subgroup(psl, s.ids));
    CHECK(ekr::cert::verify(s, psl).ok);
    for (int g : s.ids) {
      const int a = psl.image(g, q);
      const int b = psl.image(g, 0);
      CHECK(((a == q && b == 0) || (a == 0 && b == q)));
    }
  }
  CHECK_THROWS(con::psl_setwise_stabilizer(GroupContext::build(Family::kPSL, 7)));
}

TEST_CASE("coset profile of a subgroup against itself") {
  const auto gl = GroupContext::build(Family::kGL, 3);
  const auto s = con::singer_clique(gl).ids;
  const auto prof = con::left_coset_profile(gl, s, s);
  CHECK(prof == std::vector<int>{static_cast<int>(s.size())});
  const auto singletons = con::left_coset_profile(gl, s, {gl.identity()});
  CHECK(singletons.size() == s.size());
}
