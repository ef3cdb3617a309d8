#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ekr/certificate.hpp"
#include "ekr/constructions.hpp"
#include "ekr/error.hpp"
#include "ekr/group.hpp"

using ekr::cert::Certificate;
using ekr::cert::Kind;
using ekr::group::Family;
using ekr::group::GroupContext;

TEST_CASE("JSON round trip preserves every field") {
  const Certificate c{Family::kPGL, 7, Kind::kTwoIntersecting, {0, 5, 9}, "hand made"};
  const auto back = ekr::cert::from_json(ekr::cert::to_json(c));
  CHECK(back.family == c.family);
  CHECK(back.q == c.q);
  CHECK(back.kind == c.kind);
  CHECK(back.ids == c.ids);
  CHECK(back.notes == c.notes);
}

TEST_CASE("file round trip") {
  const auto gl = GroupContext::build(Family::kGL, 3);
  const auto c = ekr::constructions::singer_clique(gl);
  const auto path = (std::filesystem::temp_directory_path() / "ekr_cert_roundtrip.json").string();
  ekr::cert::save(c, path);
  const auto back = ekr::cert::load(path);
  std::remove(path.c_str());
  CHECK(back.ids == c.ids);
  CHECK(ekr::cert::verify(back).ok);
  CHECK_THROWS_AS(ekr::cert::load(path), ekr::Error);
}

TEST_CASE("malformed certificates are rejected") {
  auto j = ekr::cert::to_json({Family::kGL, 3, Kind::kClique, {0, 1}, ""});
  j["size"] = 3;
  CHECK_THROWS_AS(ekr::cert::from_json(j), ekr::Error);
  j.erase("ids");
  CHECK_THROWS_AS(ekr::cert::from_json(j), ekr::Error);
  auto k = ekr::cert::to_json({Family::kGL, 3, Kind::kClique, {0, 1}, ""});
  k["kind"] = "lattice";
  CHECK_THROWS_AS(ekr::cert::from_json(k), ekr::Error);
}

TEST_CASE("tampering is caught") {
  const auto gl = GroupContext::build(Family::kGL, 4);
  auto c = ekr::constructions::singer_clique(gl);
  REQUIRE(ekr::cert::verify(c, gl).ok);
  SUBCASE("non-derangement quotient") {
    // Any non-identity element with a fixed vector meets the identity in the set.
    for (int g = 1; g < gl.order(); ++g)
      if (gl.fix_count(g) > 0) {
        c.ids.back() = g;
        break;
      }
    const auto r = ekr::cert::verify(c, gl);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.empty());
  }
  SUBCASE("duplicate id") {
    c.ids.back() = c.ids.front();
    CHECK(ekr::cert::verify(c, gl).failure == "duplicate ids");
  }
  SUBCASE("out of range id") {
    c.ids.back() = gl.order();
    CHECK_FALSE(ekr::cert::verify(c, gl).ok);
  }
  SUBCASE("wrong group") {
    const auto sl = GroupContext::build(Family::kSL, 4);
    CHECK_FALSE(ekr::cert::verify(c, sl).ok);
  }
}

TEST_CASE("2-intersecting claims need a projective group") {
  const Certificate c{Family::kGL, 3, Kind::kTwoIntersecting, {0}, ""};
  CHECK_FALSE(ekr::cert::verify(c).ok);
}

TEST_CASE("sampling kicks in above the exhaustive budget and is reproducible") {
  const auto gl = GroupContext::build(Family::kGL, 5);
  const auto c = ekr::constructions::singer_clique(gl);
  ekr::cert::VerifyOptions opt;
  opt.exhaustive_pair_budget = 10;
  opt.sampled_pairs = 500;
  const auto a = ekr::cert::verify(c, gl, opt);
  CHECK(a.ok);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.pairs_checked == 500);
  opt.exhaustive_pair_budget = 1'000'000;
  const auto b = ekr::cert::verify(c, gl, opt);
  CHECK(b.exhaustive);
  CHECK(b.pairs_checked == 24 * 23 / 2);
}

TEST_CASE("left translates of a coclique stay cocliques") {
  const auto gl = GroupContext::build(Family::kGL, 3);
  const auto s = ekr::constructions::line_stabilizer_coclique(gl, 3);
  for (int t = 0; t < gl.order(); t += 7) CHECK(ekr::cert::verify(ekr::cert::translate(s, gl, t), gl).ok);
}
