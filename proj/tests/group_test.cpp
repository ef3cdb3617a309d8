#include <doctest.h>

#include <set>

#include "ekr/error.hpp"
#include "ekr/group.hpp"

using ekr::group::Family;
using ekr::group::GroupContext;
using ekr::group::Mat2;
using ekr::group::Vec2;

namespace {

long long gl_order(long long q) { return (q * q - 1) * (q * q - q); }

long long expected_order(Family f, long long q) {
  switch (f) {
    case Family::kGL: return gl_order(q);
    case Family::kSL: return gl_order(q) / (q - 1);
    case Family::kAGL: return gl_order(q) * q * q;
    case Family::kPGL: return gl_order(q) / (q - 1);
    case Family::kPSL: return gl_order(q) / (q - 1) / (q % 2 == 0 ? 1 : 2);
  }
  return 0;
}

int expected_degree(Family f, int q) {
  switch (f) {
    case Family::kGL:
    case Family::kSL: return q * q - 1;
    case Family::kAGL: return q * (q + 1);
    default: return q + 1;
  }
}

const Family kFamilies[] = {Family::kGL, Family::kSL, Family::kAGL, Family::kPGL, Family::kPSL};

}  // namespace

TEST_CASE("orders, degrees and group axioms") {
  for (Family fam : kFamilies) {
    for (int q : {2, 3, 4, 5}) {
      CAPTURE(q);
      CAPTURE(ekr::group::family_name(fam));
      const auto g = GroupContext::build(fam, q);
      CHECK(g.order() == expected_order(fam, q));
      CHECK(g.degree() == expected_degree(fam, q));
      CHECK(g.multiply(g.identity(), 7 % g.order()) == 7 % g.order());
      for (int x = 0; x < g.order(); x += 5) {
        CHECK(g.multiply(x, g.inverse(x)) == g.identity());
        const int y = (x * 31 + 3) % g.order();
        const int xy = g.multiply(x, y);
        // Left action: (xy)(p) = x(y(p)).
        for (int p = 0; p < g.degree(); ++p) CHECK(g.image(xy, p) == g.image(x, g.image(y, p)));
      }
      std::set<std::vector<std::uint16_t>> perms;
      for (int x = 0; x < g.order(); ++x) {
        const auto im = g.images(x);
        perms.emplace(im.begin(), im.end());
      }
      CHECK(perms.size() == static_cast<std::size_t>(g.order()));  // faithful
    }
  }
}

TEST_CASE("GL images agree with direct matrix-vector products") {
  for (int q : {3, 4}) {
    const auto g = GroupContext::build(Family::kGL, q);
    const auto& f = g.field();
    for (int x = 0; x < g.order(); ++x) {
      int fixed = 0;
      for (int p = 0; p < g.degree(); ++p) {
        const Vec2 v = g.vector_at(p);
        CHECK(g.vector_index(v) == p);
        const Vec2 w = ekr::group::mat_apply(f, g.matrix(x), v);
        CHECK(g.image(x, p) == g.vector_index(w));
        fixed += (w == v) ? 1 : 0;
      }
      CHECK(g.fix_count(x) == fixed);
    }
  }
}

TEST_CASE("projective derangement counts") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const auto pgl = GroupContext::build(Family::kPGL, q);
    CHECK(pgl.derangement_count() == q * q * (q - 1) / 2);
    int brute = 0;
    for (int x = 0; x < pgl.order(); ++x) {
      bool moves_all = true;
      for (int p = 0; p <= q; ++p) moves_all = moves_all && pgl.image(x, p) != p;
      brute += moves_all ? 1 : 0;
    }
    CHECK(brute == pgl.derangement_count());
  }
}

TEST_CASE("conjugacy classes partition the group and are closed under conjugation") {
  for (Family fam : kFamilies) {
    const auto g = GroupContext::build(fam, 3);
    int total = 0;
    int prev_min = -1;
    for (int c = 0; c < static_cast<int>(g.classes().size()); ++c) {
      const auto members = g.class_members(c);
      const auto& cls = g.classes()[c];
      CHECK(cls.size == static_cast<int>(members.size()));
      CHECK(members.front() == cls.representative);
      CHECK(cls.representative > prev_min);
      prev_min = cls.representative;
      total += cls.size;
      const int rep = cls.representative;
      for (int h = 0; h < g.order(); h += 3) {
        CHECK(g.class_of(g.multiply(g.multiply(h, rep), g.inverse(h))) == c);
      }
      CHECK(g.class_of(g.inverse(rep)) == cls.inverse_class);
      CHECK(cls.is_derangement == (cls.fix == 0));
    }
    CHECK(total == g.order());
    CHECK(g.class_of(g.identity()) == 0);
  }
}

TEST_CASE("GL(2,q) class count is q^2-1") {
  for (int q : {2, 3, 4, 5, 7}) {
    const auto g = GroupContext::build(Family::kGL, q);
    CHECK(g.classes().size() == static_cast<std::size_t>(q * q - 1));
  }
}

TEST_CASE("AGL derangement classifier agrees with the line action") {
  for (int q : {2, 3, 4}) {
    const auto agl = GroupContext::build(Family::kAGL, q);
    for (int x = 0; x < agl.order(); ++x) {
      CHECK(ekr::group::classify_agl_derangement(agl, x).derangement == (agl.fix_count(x) == 0));
    }
  }
}

TEST_CASE("derangement graph is an undirected Cayley graph") {
  const auto g = GroupContext::build(Family::kSL, 3);
  const auto graph = ekr::group::derangement_graph(g);
  CHECK(graph.is_symmetric());
  CHECK(graph.is_irreflexive());
  for (int v = 0; v < g.order(); ++v) CHECK(graph.degree(v) == g.derangement_count());
}

TEST_CASE("unsupported input") {
  CHECK_THROWS_AS(GroupContext::build(Family::kGL, 6), ekr::Error);
  CHECK_THROWS_AS(ekr::group::parse_family("gl3"), ekr::Error);
  CHECK(ekr::group::parse_family("psl") == Family::kPSL);
}
