#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ekr/characters.hpp"
#include "ekr/group.hpp"

using ekr::chars::CharacterTable;
using ekr::chars::Complex;
using ekr::group::Family;
using ekr::group::GroupContext;

namespace {

// First and second orthogonality relations, returning the worst deviation.
double orthogonality_error(const GroupContext& g, const CharacterTable& t) {
  const auto& classes = g.classes();
  double worst = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < classes.size(); ++k)
        s += static_cast<double>(classes[k].size) * t.rows[i].values[k] * std::conj(t.rows[j].values[k]);
      worst = std::max(worst, std::abs(s / static_cast<double>(g.order()) - (i == j ? 1.0 : 0.0)));
    }
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::size_t l = 0; l < classes.size(); ++l) {
      Complex s = 0.0;
      for (const auto& row : t.rows) s += row.values[k] * std::conj(row.values[l]);
      const double want = k == l ? static_cast<double>(g.order()) / classes[k].size : 0.0;
      worst = std::max(worst, std::abs(s - want) / g.order());
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("character tables are square, orthogonal and start with the trivial row") {
  for (Family fam : {Family::kGL, Family::kSL, Family::kAGL, Family::kPGL, Family::kPSL}) {
    for (int q : {2, 3, 4, 5}) {
      CAPTURE(q);
      CAPTURE(ekr::group::family_name(fam));
      const auto g = GroupContext::build(fam, q);
      const auto t = ekr::chars::character_table(g);
      REQUIRE(t.rows.size() == g.classes().size());
      long long squares = 0;
      for (const auto& row : t.rows) {
        CHECK(std::abs(row.values[g.class_of(g.identity())] - static_cast<double>(row.degree)) < 1e-9);
        squares += static_cast<long long>(row.degree) * row.degree;
      }
      CHECK(squares == g.order());
      for (const auto& v : t.rows[0].values) CHECK(std::abs(v - 1.0) < 1e-9);
      CHECK(orthogonality_error(g, t) < 1e-9);
    }
  }
}

TEST_CASE("explicit GL table matches the table found from class algebra") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const auto g = GroupContext::build(Family::kGL, q);
    const auto explicit_t = ekr::chars::gl_character_table(g);
    const auto sc = ekr::chars::StructureConstants::compute(g);
    const auto cc = ekr::chars::central_characters(sc);
    std::vector<int> sizes;
    for (const auto& c : g.classes()) sizes.push_back(c.size);
    const auto found = ekr::chars::character_table_from_central(cc, sizes);
    REQUIRE(found.rows.size() == explicit_t.rows.size());
    std::vector<bool> used(found.rows.size(), false);
    for (const auto& row : explicit_t.rows) {
      bool matched = false;
      for (std::size_t j = 0; j < found.rows.size() && !matched; ++j) {
        if (used[j]) continue;
        double d = 0.0;
        for (std::size_t k = 0; k < row.values.size(); ++k)
          d = std::max(d, std::abs(row.values[k] - found.rows[j].values[k]));
        if (d < 1e-8) matched = used[j] = true;
      }
      CHECK_MESSAGE(matched, row.label);
    }
  }
}

TEST_CASE("structure constants count products landing in a class") {
  const auto g = GroupContext::build(Family::kSL, 3);
  const auto sc = ekr::chars::StructureConstants::compute(g);
  const int n = sc.class_count();
  // a(i,j,k) = #{(x,y) in C_i x C_j : xy = z_k}, brute force at each representative.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int z = g.classes()[k].representative;
        long long count = 0;
        for (int x : g.class_members(i))
          for (int y : g.class_members(j))
            if (g.multiply(x, y) == z) ++count;
        CHECK(sc(i, j, k) == count);
      }
}

TEST_CASE("GL permutation character equals the fix count") {
  for (int q : {3, 4, 5}) {
    const auto g = GroupContext::build(Family::kGL, q);
    for (const auto& cls : g.classes()) {
      CHECK(ekr::chars::gl_permutation_character(g.extension(), *cls.gl_category) == cls.fix);
    }
  }
}

TEST_CASE("a different seed gives the same table") {
  const auto g = GroupContext::build(Family::kPSL, 5);
  const auto a = ekr::chars::character_table(g);
  const auto b = ekr::chars::character_table(g, 12345);
  REQUIRE(a.rows.size() == b.rows.size());
  for (const auto& ra : a.rows) {
    const bool found = std::any_of(b.rows.begin(), b.rows.end(), [&](const auto& rb) {
      for (std::size_t k = 0; k < ra.values.size(); ++k)
        if (std::abs(ra.values[k] - rb.values[k]) > 1e-8) return false;
      return true;
    });
    CHECK(found);
  }
}
