#include "ekr/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::spectra {
namespace {

using group::Category;
using group::Family;
using R = Rational;

int category_index(Category c) { return static_cast<int>(c); }

long long binom2(long long n) { return n * (n - 1) / 2; }

double to_double(const R& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

Weights unit_weights(const group::GroupContext& ctx) {
  Weights w;
  for (const auto& c : ctx.classes()) w.push_back(c.is_derangement ? 1.0 : 0.0);
  return w;
}

CategoryWeights gl_category_weights(int q) {
  if (q < 3) throw Error(ErrorKind::kInvalidInput, "the GL weighting needs q >= 3");
  const long long Q = q;
  CategoryWeights cw;
  cw.w[0] = R(-(Q - 1), Q * (Q - 2));
  cw.w[1] = R(1, Q * (Q - 2));
  cw.w[2] = q == 3 ? R(0) : R(1, Q * (Q - 3));  // empty category at q = 3
  cw.w[3] = R(1, Q * (Q - 1));
  return cw;
}

CategoryWeights sl_category_weights(int q) {
  if (q < 2) throw Error(ErrorKind::kInvalidInput, "the SL weighting needs q >= 2");
  const long long Q = q;
  CategoryWeights cw;
  if (q % 2 == 0) {
    cw.w[2] = R(1, Q);
    cw.w[3] = R(Q + 2, Q * Q);
  } else {
    cw.w[0] = R(0);
    cw.w[1] = R(1, Q - 1);
    cw.w[2] = R(1, Q);
    cw.w[3] = R(Q * Q - 3, Q * (Q - 1) * (Q - 1));
  }
  return cw;
}

std::array<long long, 4> gl_category_sizes(int q) {
  const long long Q = q;
  return {1, Q * Q - 1, Q * (Q + 1), Q * (Q - 1)};
}

std::array<long long, 4> sl_category_sizes(int q) {
  const long long Q = q;
  return {1, (Q * Q - 1) / 2, Q * (Q + 1), Q * (Q - 1)};
}

std::vector<Rational> canonical_weights_exact(const group::GroupContext& ctx) {
  CategoryWeights cw;
  if (ctx.family() == Family::kGL) {
    cw = gl_category_weights(ctx.q());
  } else if (ctx.family() == Family::kSL) {
    cw = sl_category_weights(ctx.q());
  } else {
    throw Error(ErrorKind::kInvalidInput, "canonical weights exist for GL and SL only");
  }
  std::vector<Rational> out;
  for (const auto& c : ctx.classes()) {
    out.push_back(c.is_derangement ? cw.w[category_index(c.gl_category->category)] : R(0));
  }
  return out;
}

Weights canonical_weights(const group::GroupContext& ctx) {
  Weights w;
  for (const auto& r : canonical_weights_exact(ctx)) w.push_back(to_double(r));
  return w;
}

double eigenvalue(const group::GroupContext& ctx, const chars::CharacterRow& chi, const Weights& w) {
  Complex sum = 0.0;
  const auto& classes = ctx.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (w[k] != 0.0) sum += w[k] * static_cast<double>(classes[k].size) * chi.values[k];
  }
  sum /= static_cast<double>(chi.degree);
  if (std::abs(sum.imag()) > 1e-8 * std::max(1.0, std::abs(sum.real()))) {
    throw Error(ErrorKind::kNumeric,
                fmt::format("eigenvalue of {} has imaginary part {:.3g}; weights are not inverse-tied",
                            chi.label, sum.imag()));
  }
  return sum.real();
}

std::vector<std::pair<double, long long>> SpectrumReport::distinct() const {
  std::vector<std::pair<double, long long>> sorted;
  for (const auto& e : entries) sorted.emplace_back(e.eigenvalue, e.multiplicity);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<std::pair<double, long long>> out;
  for (const auto& [v, m] : sorted) {
    if (!out.empty() && std::abs(out.back().first - v) < 1e-6) {
      out.back().second += m;
    } else {
      out.emplace_back(v, m);
    }
  }
  return out;
}

SpectrumReport spectrum(const group::GroupContext& ctx, const chars::CharacterTable& table,
                        const Weights& w) {
  SpectrumReport r;
  r.order = ctx.order();
  r.max = -std::numeric_limits<double>::infinity();
  r.min = std::numeric_limits<double>::infinity();
  for (const auto& chi : table.rows) {
    const double ev = eigenvalue(ctx, chi, w);
    r.entries.push_back({chi.label, ev, static_cast<long long>(chi.degree) * chi.degree});
    r.max = std::max(r.max, ev);
    r.min = std::min(r.min, ev);
  }
  return r;
}

double ratio_bound(const SpectrumReport& report) {
  if (report.min >= 0.0) {
    throw Error(ErrorKind::kDomain, "ratio bound needs a negative least eigenvalue");
  }
  return static_cast<double>(report.order) / (1.0 - report.max / report.min);
}

long long clique_coclique_bound(long long order, long long clique_size) {
  if (clique_size < 1) throw Error(ErrorKind::kInvalidInput, "clique size must be positive");
  return order / clique_size;
}

std::vector<double> numeric_spectrum(const group::GroupContext& ctx, const Weights& w) {
  const int n = ctx.order();
  if (n > 500) throw Error(ErrorKind::kBudget, "dense eigensolve is limited to 500 vertices");
  Eigen::MatrixXd m(n, n);
  for (int g = 0; g < n; ++g) {
    const int gi = ctx.inverse(g);
    for (int h = 0; h < n; ++h) m(g, h) = w[ctx.class_of(ctx.multiply(gi, h))];
  }
  if (!m.isApprox(m.transpose(), 1e-12)) {
    throw Error(ErrorKind::kNumeric, "weighted matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

Rational category_eigenvalue(const Rational (&sums)[4], long long degree,
                             const std::array<long long, 4>& sizes, const CategoryWeights& w) {
  R total = 0;
  for (int c = 0; c < 4; ++c) total += w.w[c] * sizes[c] * sums[c];
  return total / degree;
}

std::vector<GLTableRow> gl_category_table(int q) {
  const long long Q = q;
  const bool odd = q % 2 == 1;
  std::vector<GLTableRow> rows;
  // Printed values with a pole at this q are only formed for rows that exist.
  auto add = [&](std::string label, long long degree, long long count, std::array<R, 4> sums,
                 R unit, const std::function<R()>& weighted) {
    if (count <= 0) return;
    GLTableRow row{std::move(label), degree, count, {sums[0], sums[1], sums[2], sums[3]}, unit, weighted()};
    rows.push_back(std::move(row));
  };
  const R c_m2 = binom2(Q - 2);
  const R c_q = binom2(Q);
  add("rho'(1)", 1, 1, {Q - 2, Q - 2, c_m2, c_q}, R(Q * Q * Q * Q - 2 * Q * Q * Q - Q * Q + 3 * Q),
      [&] { return R(Q * Q - 2); });
  if (odd) {
    add("rho'(alpha^2=1)", 1, 1, {Q - 2, Q - 2, R(-(Q - 3), 2), R(-(Q - 1), 2)}, R(Q), [] { return R(-1); });
  }
  add("rho'(else)", 1, odd ? Q - 3 : Q - 2, {-1, -1, 1, 0}, R(Q),
      [&] { return R(Q - 1, Q - 2) + R(Q + 1, Q - 3); });
  add("rho_bar(1)", Q, 1, {Q * (Q - 2), 0, c_m2, -c_q}, R(-Q * Q + Q + 1), [] { return R(-1); });
  if (odd) {
    add("rho_bar(alpha^2=1)", Q, 1, {Q * (Q - 2), 0, R(-(Q - 3), 2), R(Q - 1, 2)}, R(Q), [] { return R(-1); });
  }
  add("rho_bar(else)", Q, odd ? Q - 3 : Q - 2, {-Q, 0, 1, 0}, R(Q),
      [&] { return R(1, Q) * (R(Q - 1, Q - 2) + R(Q + 1, Q - 3)); });
  add("pi(chi=1)", Q - 1, odd ? (Q - 1) / 2 : Q / 2, {(Q - 1) * (Q - 2), -(Q - 2), 0, Q - 1}, R(Q),
      [&] { return R(Q - 3); });
  add("pi(chi!=1)", Q - 1, odd ? (Q - 1) * (Q - 1) / 2 : Q * (Q - 2) / 2, {-(Q - 1), 1, 0, 0}, R(Q),
      [&] { return R(2, Q - 2); });
  add("rho(alpha_bar=beta)", Q + 1, odd ? (Q - 3) / 2 : (Q - 2) / 2, {(Q + 1) * (Q - 2), Q - 2, -(Q - 3), 0},
      R(Q), [] { return R(-1); });
  add("rho(1,beta)", Q + 1, Q - 2, {-(Q + 1), -1, -(Q - 3), 0}, R(-Q * Q + 2 * Q), [] { return R(-1); });
  add("rho(else)", Q + 1, odd ? (Q - 3) * (Q - 3) / 2 : (Q - 2) * (Q - 4) / 2, {-(Q + 1), -1, 2, 0}, R(Q),
      [&] { return R(2, Q - 3); });
  return rows;
}

std::string gl_table_row_of(const chars::GLCharacter& chi, int q) {
  const int m = q - 1;
  switch (chi.family) {
    case chars::GLFamily::kRhoPrime:
      if (chi.a == 0) return "rho'(1)";
      return (2 * chi.a) % m == 0 ? "rho'(alpha^2=1)" : "rho'(else)";
    case chars::GLFamily::kRhoBar:
      if (chi.a == 0) return "rho_bar(1)";
      return (2 * chi.a) % m == 0 ? "rho_bar(alpha^2=1)" : "rho_bar(else)";
    case chars::GLFamily::kPi: return chi.c % m == 0 ? "pi(chi=1)" : "pi(chi!=1)";
    case chars::GLFamily::kRho:
      if (chi.a == 0 || chi.b == 0) return "rho(1,beta)";
      return (chi.a + chi.b) % m == 0 ? "rho(alpha_bar=beta)" : "rho(else)";
  }
  return "?";
}

bool RationalTableCheck::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.matches; });
}

namespace {

void finish(RationalTableCheck& c) {
  bool first = true;
  for (const auto& r : c.rows) {
    if (first || r.computed > c.max) c.max = r.computed;
    if (first || r.computed < c.min) c.min = r.computed;
    first = false;
  }
  if (c.min < 0) c.ratio = R(c.order) / (R(1) - c.max / c.min);
}

RationalTableCheck gl_check(int q, bool weighted) {
  RationalTableCheck c;
  c.name = weighted ? "gl-weighted-eigenvalues" : "gl-category-sum-eigenvalues";
  const long long Q = q;
  c.order = (Q * Q - 1) * (Q * Q - Q);
  CategoryWeights w;
  if (weighted) {
    w = gl_category_weights(q);
  } else {
    for (auto& x : w.w) x = 1;
  }
  const auto sizes = gl_category_sizes(q);
  for (const auto& row : gl_category_table(q)) {
    const R computed = category_eigenvalue(row.sums, row.degree, sizes, w);
    const R printed = weighted ? row.printed_weighted : row.printed_unit;
    c.rows.push_back({row.label, row.degree, row.count, computed, printed, computed == printed});
  }
  finish(c);
  return c;
}

}  // namespace

RationalTableCheck gl_unit_check(int q) { return gl_check(q, false); }
RationalTableCheck gl_weighted_check(int q) { return gl_check(q, true); }

RationalTableCheck sl_weighted_check(int q) {
  const auto table = chars::sl_category_sums(q);
  RationalTableCheck c;
  c.name = table.name + "-weighted";
  const long long Q = q;
  c.order = Q * (Q * Q - 1);
  const auto w = sl_category_weights(q);
  const auto sizes = sl_category_sizes(q);
  for (const auto& row : table.rows) {
    if (row.count <= 0) continue;
    const R computed = category_eigenvalue(row.sums, row.degree, sizes, w);
    c.rows.push_back({row.label, row.degree, row.count, computed, row.printed_eigenvalue,
                      computed == row.printed_eigenvalue});
  }
  finish(c);
  return c;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

nlohmann::json to_json(const SpectrumReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"character_label", e.label}, {"eigenvalue", e.eigenvalue}, {"multiplicity", e.multiplicity}});
  }
  nlohmann::json distinct = nlohmann::json::array();
  for (const auto& [v, m] : r.distinct()) distinct.push_back({{"eigenvalue", v}, {"multiplicity", m}});
  nlohmann::json j{{"order", r.order}, {"max", r.max}, {"min", r.min}, {"entries", std::move(entries)},
                   {"distinct", std::move(distinct)}};
  if (r.min < 0) j["ratio_bound"] = ratio_bound(r);
  return j;
}

nlohmann::json to_json(const RationalTableCheck& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"label", r.label},
                    {"degree", r.degree},
                    {"count", r.count},
                    {"computed", format_rational(r.computed)},
                    {"printed", format_rational(r.printed)},
                    {"matches", r.matches}});
  }
  return {{"table", c.name},
          {"order", c.order},
          {"max", format_rational(c.max)},
          {"min", format_rational(c.min)},
          {"ratio_bound", format_rational(c.ratio)},
          {"rows", std::move(rows)}};
}

std::string to_text(const SpectrumReport& r) {
  std::string out = fmt::format("{:<24} {:>16} {:>12}\n", "character", "eigenvalue", "multiplicity");
  for (const auto& e : r.entries) out += fmt::format("{:<24} {:>16.6f} {:>12}\n", e.label, e.eigenvalue, e.multiplicity);
  out += fmt::format("max {:.6f}  min {:.6f}", r.max, r.min);
  if (r.min < 0) out += fmt::format("  ratio bound {:.6f}", ratio_bound(r));
  out += "\n";
  return out;
}

std::string to_csv(const SpectrumReport& r) {
  std::string out = "character_label,eigenvalue,multiplicity\n";
  for (const auto& e : r.entries) out += fmt::format("{},{:.12g},{}\n", e.label, e.eigenvalue, e.multiplicity);
  return out;
}

std::string to_text(const RationalTableCheck& c) {
  std::string out = fmt::format("[{}]\n{:<28} {:>6} {:>8} {:>16} {:>16}  {}\n", c.name, "row", "dim", "number",
                                "computed", "printed", "match");
  for (const auto& r : c.rows) {
    out += fmt::format("{:<28} {:>6} {:>8} {:>16} {:>16}  {}\n", r.label, r.degree, r.count,
                       format_rational(r.computed), format_rational(r.printed), r.matches ? "yes" : "NO");
  }
  out += fmt::format("max {}  min {}  ratio bound {}\n", format_rational(c.max), format_rational(c.min),
                     format_rational(c.ratio));
  return out;
}

}  // namespace ekr::spectra
