#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ekr/characters.hpp"
#include "ekr/ekr_checks.hpp"
#include "ekr/error.hpp"
#include "ekr/group.hpp"
#include "ekr/spectra.hpp"

using ekr::group::Family;
using ekr::group::GroupContext;
namespace spectra = ekr::spectra;

namespace {

// Eigenvalues with multiplicity, expanded and sorted, from the character formula.
std::vector<double> expanded(const spectra::SpectrumReport& r) {
  std::vector<double> out;
  for (const auto& e : r.entries) out.insert(out.end(), e.multiplicity, e.eigenvalue);
  std::sort(out.begin(), out.end());
  return out;
}

void check_against_dense(const GroupContext& g, const spectra::Weights& w) {
  const auto t = ekr::chars::character_table(g);
  const auto formula = expanded(spectra::spectrum(g, t, w));
  auto dense = spectra::numeric_spectrum(g, w);
  std::sort(dense.begin(), dense.end());
  REQUIRE(formula.size() == dense.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i) worst = std::max(worst, std::abs(formula[i] - dense[i]));
  CHECK(worst < 1e-6);
}

}  // namespace

TEST_CASE("character eigenvalues match a dense eigensolve") {
  for (Family fam : {Family::kGL, Family::kSL, Family::kAGL, Family::kPGL, Family::kPSL}) {
    for (int q : {2, 3, 4, 5}) {
      const auto g = GroupContext::build(fam, q);
      if (g.order() > 500) continue;
      CAPTURE(q);
      CAPTURE(ekr::group::family_name(fam));
      check_against_dense(g, spectra::unit_weights(g));
    }
  }
  for (Family fam : {Family::kGL, Family::kSL}) {
    for (int q : {4, 5}) {
      const auto g = GroupContext::build(fam, q);
      if (g.order() <= 500) check_against_dense(g, spectra::canonical_weights(g));
    }
  }
}

TEST_CASE("unit-weight spectrum has the derangement count on top") {
  for (Family fam : {Family::kGL, Family::kSL, Family::kPGL}) {
    for (int q : {3, 4, 5, 7}) {
      const auto g = GroupContext::build(fam, q);
      const auto r = spectra::spectrum(g, ekr::chars::character_table(g), spectra::unit_weights(g));
      CHECK(r.max == doctest::Approx(g.derangement_count()));
      CHECK(r.entries.front().eigenvalue == doctest::Approx(g.derangement_count()));
      long long total = 0;
      for (const auto& e : r.entries) total += e.multiplicity;
      CHECK(total == g.order());
    }
  }
}

TEST_CASE("exact GL unit-weight rows agree with the computed table") {
  for (int q : {3, 4, 5, 7, 8}) {
    CAPTURE(q);
    const auto c = spectra::gl_unit_check(q);
    CHECK(c.all_match());
    const auto g = GroupContext::build(Family::kGL, q);
    CHECK(c.max == spectra::Rational(g.derangement_count()));
  }
}

TEST_CASE("GL canonical weights give the q^2-2 top and q(q-1) ratio for q >= 4") {
  for (int q : {4, 5, 7, 8}) {
    CAPTURE(q);
    const auto c = spectra::gl_weighted_check(q);
    CHECK(c.max == spectra::Rational(q * q - 2));
    CHECK(c.min == spectra::Rational(-1));
    CHECK(c.ratio == spectra::Rational(q * (q - 1)));
  }
}

TEST_CASE("SL canonical weights give a ratio bound of q") {
  for (int q : {3, 4, 5, 7, 8}) {
    CAPTURE(q);
    const auto c = spectra::sl_weighted_check(q);
    CHECK(c.min == spectra::Rational(-1));
    CHECK(c.ratio == spectra::Rational(q));  // |SL(2,q)| / (q^2-1)
  }
}

TEST_CASE("canonical weights are supported on derangements") {
  for (Family fam : {Family::kGL, Family::kSL}) {
    const auto g = GroupContext::build(fam, 5);
    const auto w = spectra::canonical_weights(g);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (!g.classes()[k].is_derangement) CHECK(w[k] == 0.0);
  }
}

TEST_CASE("clique-coclique bound") {
  CHECK(spectra::clique_coclique_bound(120, 24) == 5);
  CHECK(spectra::clique_coclique_bound(48, 8) == 6);
}

TEST_CASE("dense eigensolve refuses large groups") {
  const auto g = GroupContext::build(Family::kGL, 7);
  CHECK_THROWS_AS(spectra::numeric_spectrum(g, spectra::unit_weights(g)), ekr::Error);
}
