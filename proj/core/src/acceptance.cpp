#include "ekr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "ekr/certificate.hpp"
#include "ekr/characters.hpp"
#include "ekr/constructions.hpp"
#include "ekr/ekr_checks.hpp"
#include "ekr/error.hpp"
#include "ekr/group.hpp"
#include "ekr/lp.hpp"
#include "ekr/search.hpp"
#include "ekr/spectra.hpp"

namespace ekr::acceptance {
namespace {

using group::Family;
using group::GroupContext;
using spectra::Rational;

constexpr double kNumericTolerance = 1e-6;     // criterion 2
constexpr double kLpTolerance = 1e-5;          // criterion 5
constexpr double kOrthogonality = 1e-9;        // criterion 9
constexpr double kCentralVsExplicit = 1e-8;    // criterion 9
constexpr double kProjectionTolerance = 1e-8;  // criterion 9

class Builder {
 public:
  explicit Builder(const Options& o) : options_(o) {}

  std::vector<int> qs(std::initializer_list<int> own) const {
    std::vector<int> out;
    for (int q : own)
      if (!options_.q_list || std::count(options_.q_list->begin(), options_.q_list->end(), q)) out.push_back(q);
    return out;
  }
  bool has(int q) const { return !qs({q}).empty(); }

  const Options& options() const { return options_; }

 private:
  const Options& options_;
};

void add(Criterion& c, std::string what, bool pass, std::string detail = {}) {
  c.items.push_back({std::move(what), pass, std::move(detail)});
}

// Runs `body`, turning a thrown Error into a failed item.
template <class F>
void guarded(Criterion& c, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    add(c, what, false, fmt::format("threw: {}", e.what()));
  }
}

std::string rat(const Rational& r) { return spectra::format_rational(r); }

// ------------------------------------------------------------------ 1

void derangement_census(Criterion& c, const Builder& b) {
  for (int q : b.qs({2, 3, 4, 5, 7, 8})) {
    guarded(c, fmt::format("GL(2,{})", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      const long long formula = 1LL * q * (1LL * q * q * q - 2LL * q * q - q + 3);
      // Brute force: apply each matrix to every nonzero vector.
      const auto& f = gl.field();
      long long brute = 0;
      for (int g = 0; g < gl.order(); ++g) {
        bool fixes = false;
        for (int x = 0; x < q && !fixes; ++x)
          for (int y = 0; y < q && !fixes; ++y) {
            if (x == 0 && y == 0) continue;
            const group::Vec2 v{x, y};
            fixes = group::mat_apply(f, gl.matrix(g), v) == v;
          }
        brute += !fixes;
      }
      const long long counted = gl.derangement_count();
      add(c, fmt::format("GL(2,{}) derangements", q), counted == formula && brute == formula,
          fmt::format("classes {} brute {} formula {}", counted, brute, formula));
    });
  }
}

// ------------------------------------------------------------------ 2

void gl_spectrum(Criterion& c, const Builder& b) {
  for (int q : b.qs({3, 4, 5, 7})) {
    guarded(c, fmt::format("GL(2,{}) spectrum", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      const auto table = chars::character_table(gl);
      const auto rep = spectra::spectrum(gl, table, spectra::unit_weights(gl));
      const long long Q = q;
      std::vector<std::pair<double, long long>> want = {
          {static_cast<double>(Q * (Q * Q * Q - 2 * Q * Q - Q + 3)), 1},
          {static_cast<double>(Q), Q * Q * Q * Q - 2 * Q * Q * Q - 2 * Q * Q + 4 * Q + 1},
          {static_cast<double>(-Q * Q + 2 * Q), (Q + 1) * (Q + 1) * (Q - 2)},
          {static_cast<double>(-Q * Q + Q + 1), Q * Q}};
      std::sort(want.begin(), want.end(), [](auto& x, auto& y) { return x.first > y.first; });
      const auto got = rep.distinct();
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = std::abs(got[i].first - want[i].first) < kNumericTolerance && got[i].second == want[i].second;
      }
      long long total = 0;
      std::string shown;
      for (auto [v, m] : got) {
        total += m;
        shown += fmt::format(" {}^{}", v, m);
      }
      add(c, fmt::format("GL(2,{}) four eigenvalues with multiplicities", q), same, "got" + shown);
      add(c, fmt::format("GL(2,{}) multiplicities sum to |G|", q), total == gl.order(),
          fmt::format("{} vs {}", total, gl.order()));
      if (q <= 5) {
        const auto numeric = spectra::numeric_spectrum(gl, spectra::unit_weights(gl));
        std::vector<double> from_chars;
        for (const auto& e : rep.entries)
          for (long long k = 0; k < e.multiplicity; ++k) from_chars.push_back(e.eigenvalue);
        std::sort(from_chars.begin(), from_chars.end());
        double dev = from_chars.size() == numeric.size() ? 0.0 : INFINITY;
        for (std::size_t i = 0; std::isfinite(dev) && i < numeric.size(); ++i) {
          dev = std::max(dev, std::abs(numeric[i] - from_chars[i]));
        }
        add(c, fmt::format("GL(2,{}) matches dense adjacency eigenvalues", q), dev < kNumericTolerance,
            fmt::format("max deviation {:.3g}", dev));
      }
    });
  }
}

// ------------------------------------------------------------------ 3, 4

void table_items(Criterion& c, const spectra::RationalTableCheck& chk, const std::string& name) {
  for (const auto& row : chk.rows) {
    add(c, fmt::format("{} row {}", name, row.label), row.matches,
        fmt::format("computed {} printed {}", rat(row.computed), rat(row.printed)));
  }
}

void weighted_gl(Criterion& c, const Builder& b) {
  for (int q : b.qs({3, 4, 5, 7})) {
    guarded(c, fmt::format("GL(2,{}) weighted", q), [&] {
      const auto chk = spectra::gl_weighted_check(q);
      const std::string name = fmt::format("GL(2,{})", q);
      table_items(c, chk, name);
      add(c, name + " max = q^2-2", chk.max == Rational(q * q - 2), "max " + rat(chk.max));
      bool designated = true;
      std::string which;
      for (const auto& row : chk.rows) {
        if (row.printed != Rational(-1)) continue;
        which += " " + row.label;
        designated = designated && row.computed == Rational(-1);
      }
      add(c, name + " designated rows = -1", designated, "rows" + which);
      add(c, name + " ratio = q(q-1)", chk.ratio == Rational(q * (q - 1)), "ratio " + rat(chk.ratio));
    });
  }
}

void weighted_sl(Criterion& c, const Builder& b) {
  for (int q : b.qs({3, 5, 7, 4, 8})) {
    guarded(c, fmt::format("SL(2,{}) weighted", q), [&] {
      const auto chk = spectra::sl_weighted_check(q);
      const std::string name = fmt::format("SL(2,{})", q);
      table_items(c, chk, name);
      add(c, name + " ratio = q", chk.ratio == Rational(q), "ratio " + rat(chk.ratio));
    });
  }
}

// ------------------------------------------------------------------ 5

void lp_ratios(Criterion& c, const Builder& b) {
  const std::pair<int, int> agl_want[] = {{3, 5}, {4, 9}, {5, 9}, {7, 13}};
  for (auto [q, want] : agl_want) {
    if (!b.has(q)) continue;
    guarded(c, fmt::format("AGL(2,{}) LP", q), [&] {
      const auto agl = GroupContext::build(Family::kAGL, q);
      const auto inst = lp::build_lp(agl, chars::character_table(agl));
      const auto res = lp::solve_lp(inst);
      add(c, fmt::format("AGL(2,{}) LP optimum = {}", q, want),
          res.status == lp::LPStatus::kOptimal && std::abs(res.objective - want) <= kLpTolerance,
          fmt::format("{} objective {:.9f}", lp::status_name(res.status), res.objective));
    });
  }
  for (int q : b.qs({4, 5})) {
    guarded(c, fmt::format("GL(2,{}) LP", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      const auto table = chars::character_table(gl);
      const auto res = lp::solve_lp(lp::build_lp(gl, table));
      const auto ceil = lp::lp_ceiling_check(gl, table, res);
      add(c, fmt::format("GL(2,{}) LP optimum = q^2-2", q),
          res.status == lp::LPStatus::kOptimal && std::abs(res.objective - (q * q - 2)) <= kLpTolerance &&
              ceil.attains_ceiling,
          fmt::format("objective {:.9f}", res.objective));
    });
  }
}

// ------------------------------------------------------------------ 6

void search_item(Criterion& c, const GroupContext& ctx, const search::SearchOutcome& out, int want,
                 cert::Kind kind, const std::string& name) {
  const auto cert = search::to_certificate(ctx, out, kind);
  const auto ver = cert::verify(cert, ctx);
  add(c, fmt::format("{} = {}", name, want), out.optimal && out.size() == want && ver.ok,
      fmt::format("size {} {} nodes {} {:.2f} s{}", out.size(), out.optimal ? "proved" : "lower bound", out.nodes,
                  out.seconds, ver.ok ? "" : "; verification: " + ver.failure));
}

void search_values(Criterion& c, const Builder& b) {
  search::SearchOptions opt;
  opt.reduction = search::Reduction::kClasses;
  opt.budget_seconds = b.options().search_budget_seconds;
  if (b.has(3)) {
    guarded(c, "AGL(2,3) search", [&] {
      const auto agl = GroupContext::build(Family::kAGL, 3);
      const auto out = search::max_coclique_cayley(agl, group::derangement_graph(agl), opt);
      search_item(c, agl, out, 45, cert::Kind::kCoclique, "AGL(2,3) max intersecting");
    });
  }
  const std::pair<int, int> pgl[] = {{3, 2}, {4, 4}, {5, 5}, {7, 8}, {8, 10}, {9, 12}};
  const std::pair<int, int> psl[] = {{3, 1}, {4, 4}, {5, 4}, {7, 4}, {8, 10}, {9, 8}};
  auto run = [&](Family f, int q, int want, double budget) {
    if (!b.has(q)) return;
    const std::string name = fmt::format("{}(2,{}) max 2-intersecting", group::family_name(f), q);
    guarded(c, name, [&] {
      const auto ctx = GroupContext::build(f, q);
      auto o = opt;
      o.budget_seconds = budget;
      search_item(c, ctx, search::max_two_intersecting(ctx, o), want, cert::Kind::kTwoIntersecting, name);
    });
  };
  for (auto [q, want] : pgl) run(Family::kPGL, q, want, opt.budget_seconds);
  for (auto [q, want] : psl) run(Family::kPSL, q, want, opt.budget_seconds);
  run(Family::kPGL, 11, 17, b.options().long_search_budget_seconds);
}

// ------------------------------------------------------------------ 7

void verified_size(Criterion& c, const GroupContext& ctx, const cert::Certificate& s, std::size_t want,
                   const std::string& name) {
  const auto ver = cert::verify(s, ctx);
  add(c, name, ver.ok && s.size() == want,
      fmt::format("size {} (want {}), {} after {} pairs ({}){}", s.size(), want, ver.ok ? "verified" : "failed",
                  ver.pairs_checked, ver.exhaustive ? "exhaustive" : "sampled",
                  ver.ok ? "" : ": " + ver.failure));
}

void construction_checks(Criterion& c, const Builder& b) {
  for (int q : b.qs({2, 3, 4, 5, 7, 8, 9})) {
    guarded(c, fmt::format("Singer GL(2,{})", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      verified_size(c, gl, constructions::singer_clique(gl), q * q - 1, fmt::format("Singer clique GL(2,{})", q));
    });
  }
  for (int q : b.qs({3, 4, 5, 7, 9, 11})) {
    guarded(c, fmt::format("PGL(2,{}) construction", q), [&] {
      const auto pgl = GroupContext::build(Family::kPGL, q);
      const std::size_t want = q % 2 ? (3 * q - 5) / 2 : (3 * q - 4) / 2;
      verified_size(c, pgl, constructions::pgl_two_intersecting(pgl), want,
                    fmt::format("PGL(2,{}) 2-intersecting construction", q));
    });
  }
  const std::pair<int, std::size_t> lifts[] = {{5, 500}, {7, 2352}};
  for (auto [q, want] : lifts) {
    if (!b.has(q)) continue;
    guarded(c, fmt::format("AGL(2,{}) lift", q), [&] {
      const auto pgl = GroupContext::build(Family::kPGL, q);
      const auto agl = GroupContext::build(Family::kAGL, q);
      verified_size(c, agl, constructions::agl_lift(agl, pgl, constructions::pgl_two_intersecting(pgl)), want,
                    fmt::format("AGL(2,{}) lifted intersecting set", q));
    });
  }
  for (int q : b.qs({3, 4, 5})) {
    guarded(c, fmt::format("line stabilizer GL(2,{})", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      const auto s = constructions::line_stabilizer_coclique(gl, q);
      verified_size(c, gl, s, q * (q - 1), fmt::format("line-stabilizer coclique GL(2,{})", q));
      add(c, fmt::format("line-stabilizer coclique GL(2,{}) is not canonical", q),
          !constructions::equals_canonical_set(gl, s.ids), "compared against every S_{i,j}");
    });
  }
}

// ------------------------------------------------------------------ 8

std::string spectrum_text(const std::vector<checks::SpectrumItem>& s) {
  std::string out;
  for (const auto& it : s)
    if (it.multiplicity) out += fmt::format(" {}^{}", it.value, it.multiplicity);
  return out;
}

void gram_checks(Criterion& c, const Builder& b) {
  for (int q : b.qs({3, 4})) {
    guarded(c, fmt::format("GL(2,{}) Gram", q), [&] {
      const auto r = checks::gl_spanning_gram(q);
      add(c, fmt::format("GL(2,{}) N^T N rank", q), r.rank_matches(),
          fmt::format("rank {} want {}", r.rank, r.expected_rank));
      add(c, fmt::format("GL(2,{}) N^T N spectrum", q), r.printed_matches(),
          "observed" + spectrum_text(r.observed) + "; stated" + spectrum_text(r.printed));
    });
  }
  for (int q : b.qs({3, 5, 4})) {
    guarded(c, fmt::format("SL(2,{}) Gram", q), [&] {
      const auto r = checks::sl_gram(q);
      add(c, fmt::format("SL(2,{}) N N^T rank", q), r.rank_matches(),
          fmt::format("rank {} want {}", r.rank, r.expected_rank));
      add(c, fmt::format("SL(2,{}) N N^T entrywise decomposition", q), r.identity_holds);
      add(c, fmt::format("SL(2,{}) N N^T spectrum", q), r.printed_matches(),
          "observed" + spectrum_text(r.observed) + "; stated" + spectrum_text(r.printed));
    });
  }
}

// ------------------------------------------------------------------ 9

double orthogonality_error(const GroupContext& ctx, const chars::CharacterTable& t) {
  const auto& cls = ctx.classes();
  double worst = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i; j < t.rows.size(); ++j) {
      chars::Complex s = 0.0;
      for (std::size_t k = 0; k < cls.size(); ++k)
        s += static_cast<double>(cls[k].size) * t.rows[i].values[k] * std::conj(t.rows[j].values[k]);
      s /= static_cast<double>(ctx.order());
      worst = std::max(worst, std::abs(s - chars::Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

// Largest distance between each explicit row and its nearest central row,
// requiring the matching to be a bijection.
double central_vs_explicit(const GroupContext& gl) {
  const auto explicit_table = chars::gl_character_table(gl);
  const auto sc = chars::StructureConstants::compute(gl);
  const auto central = chars::character_table_from_central(chars::central_characters(sc), sc.sizes());
  if (central.rows.size() != explicit_table.rows.size()) return INFINITY;
  std::vector<char> used(central.rows.size(), 0);
  double worst = 0.0;
  for (const auto& row : explicit_table.rows) {
    double best = INFINITY;
    std::size_t at = 0;
    for (std::size_t r = 0; r < central.rows.size(); ++r) {
      if (used[r]) continue;
      double d = 0.0;
      for (std::size_t k = 0; k < row.values.size(); ++k) d = std::max(d, std::abs(row.values[k] - central.rows[r].values[k]));
      if (d < best) {
        best = d;
        at = r;
      }
    }
    used[at] = 1;
    worst = std::max(worst, best);
  }
  return worst;
}

void property_suites(Criterion& c, const Builder& b) {
  const std::pair<Family, int> groups[] = {{Family::kGL, 3}, {Family::kGL, 4}, {Family::kGL, 5}, {Family::kSL, 3},
                                           {Family::kSL, 4}, {Family::kSL, 5}, {Family::kAGL, 3}, {Family::kPGL, 5},
                                           {Family::kPGL, 7}, {Family::kPSL, 5}, {Family::kPSL, 7}};
  for (auto [f, q] : groups) {
    if (!b.has(q)) continue;
    const std::string name = fmt::format("{}(2,{})", group::family_name(f), q);
    guarded(c, name + " orthogonality", [&] {
      const auto ctx = GroupContext::build(f, q);
      const double err = orthogonality_error(ctx, chars::character_table(ctx));
      add(c, name + " character orthogonality", err < kOrthogonality, fmt::format("max error {:.3g}", err));
    });
  }
  for (int q : b.qs({2, 3, 4, 5})) {
    guarded(c, fmt::format("GL(2,{}) central", q), [&] {
      const auto gl = GroupContext::build(Family::kGL, q);
      const double d = central_vs_explicit(gl);
      add(c, fmt::format("GL(2,{}) central characters match explicit table", q), d < kCentralVsExplicit,
          fmt::format("max deviation {:.3g}", d));
    });
  }
  for (int q : b.qs({2, 3, 4})) {
    guarded(c, fmt::format("AGL(2,{}) classifier", q), [&] {
      const auto agl = GroupContext::build(Family::kAGL, q);
      int mismatches = 0;
      for (int g = 0; g < agl.order(); ++g) {
        mismatches += group::classify_agl_derangement(agl, g).derangement != (agl.fix_count(g) == 0);
      }
      add(c, fmt::format("AGL(2,{}) derangement classifier = brute force", q), mismatches == 0,
          fmt::format("{} mismatches over {} elements", mismatches, agl.order()));
    });
  }
  // Reduced and unreduced searches agree on graphs with at most 500 vertices.
  const std::pair<Family, int> small[] = {{Family::kGL, 3}, {Family::kGL, 4}, {Family::kSL, 3}, {Family::kSL, 4},
                                          {Family::kSL, 5}, {Family::kAGL, 3}, {Family::kPGL, 5}, {Family::kPGL, 7},
                                          {Family::kPSL, 7}};
  for (auto [f, q] : small) {
    if (!b.has(q)) continue;
    const std::string name = fmt::format("{}(2,{})", group::family_name(f), q);
    guarded(c, name + " reductions", [&] {
      const auto ctx = GroupContext::build(f, q);
      const bool projective = f == Family::kPGL || f == Family::kPSL;
      const auto g = projective ? group::two_fix_graph(ctx) : group::derangement_graph(ctx);
      std::string sizes;
      std::vector<int> found;
      bool all_proved = true;
      for (auto r : {search::Reduction::kNone, search::Reduction::kIdentity, search::Reduction::kClasses}) {
        search::SearchOptions o;
        o.reduction = r;
        o.budget_seconds = b.options().search_budget_seconds;
        const auto out = search::max_coclique_cayley(ctx, g, o);
        all_proved = all_proved && out.optimal && search::check_set(g, out.best, false);
        found.push_back(out.size());
        sizes += fmt::format(" {}", out.size());
      }
      const bool equal = std::adjacent_find(found.begin(), found.end(), std::not_equal_to<>()) == found.end();
      add(c, name + " reduced search = unreduced search", equal && all_proved,
          "none/identity/classes:" + sizes);
    });
  }
  const std::pair<Family, int> module_groups[] = {{Family::kGL, 3}, {Family::kSL, 3}};
  for (auto [f, q] : module_groups) {
    if (!b.has(q)) continue;
    const std::string name = fmt::format("{}(2,{})", group::family_name(f), q);
    guarded(c, name + " projection", [&] {
      const auto ctx = GroupContext::build(f, q);
      const auto table = chars::character_table(ctx);
      search::SearchOptions o;
      o.reduction = search::Reduction::kClasses;
      const auto out = search::max_coclique_cayley(ctx, group::derangement_graph(ctx), o);
      const auto rep = checks::projection_report(ctx, table, out.best);
      add(c, name + " searched maximum coclique lies in the permutation module",
          out.optimal && rep.max_outside < kProjectionTolerance,
          fmt::format("size {}, largest outside projection {:.3g}", out.size(), rep.max_outside));
    });
  }
}

struct CriterionDef {
  int id;
  const char* title;
  void (*body)(Criterion&, const Builder&);
};

constexpr CriterionDef kCriteria[] = {
    {1, "GL derangement census", derangement_census},
    {2, "GL unit-weight spectrum", gl_spectrum},
    {3, "GL weighted eigenvalues and ratio bound", weighted_gl},
    {4, "SL weighted eigenvalues and ratio bound", weighted_sl},
    {5, "LP ratios", lp_ratios},
    {6, "exact search values", search_values},
    {7, "constructions", construction_checks},
    {8, "EKR-module linear algebra", gram_checks},
    {9, "property suites", property_suites},
};

}  // namespace

bool Criterion::pass() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

int Criterion::failures() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.pass; }));
}

std::vector<Criterion> reproduce_all(const Options& options) {
  std::vector<Criterion> out;
  if (options.q_list && options.q_list->empty()) return out;
  const Builder b(options);
  for (const auto& def : kCriteria) {
    if (!options.only.empty() && std::count(options.only.begin(), options.only.end(), def.id) == 0) continue;
    Criterion c;
    c.id = def.id;
    c.title = def.title;
    const auto start = std::chrono::steady_clock::now();
    def.body(c, b);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.on_done) options.on_done(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::string summary_line(const Criterion& c) {
  std::string line = fmt::format("[{}] {} {} ({} items, {} failed, {:.1f} s)", c.pass() ? "PASS" : "FAIL", c.id,
                                 c.title, c.items.size(), c.failures(), c.seconds);
  for (const auto& i : c.items)
    if (!i.pass) line += fmt::format("\n       - {}: {}", i.what, i.detail);
  return line;
}

nlohmann::json to_json(const std::vector<Criterion>& cs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cs) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : c.items) items.push_back({{"what", i.what}, {"pass", i.pass}, {"detail", i.detail}});
    out.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"seconds", c.seconds}, {"items", items}});
  }
  return out;
}

}  // namespace ekr::acceptance
