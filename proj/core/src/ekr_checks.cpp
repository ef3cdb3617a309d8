#include "ekr/ekr_checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::checks {
namespace {

constexpr double kBinTolerance = 1e-6;

std::vector<SpectrumItem> items(std::initializer_list<std::pair<double, long long>> list) {
  std::vector<SpectrumItem> out;
  for (auto [v, m] : list) out.push_back({v, m});
  return out;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::kNumeric, "Gram eigensolve failed");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

void fill_spectrum(GramReport& r, const Eigen::MatrixXd& m) {
  const auto ev = symmetric_eigenvalues(m);
  r.side = static_cast<int>(m.rows());
  r.observed = bin_spectrum(ev);
  r.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
  r.rank = static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double x) { return x > kBinTolerance; }));
  if (r.min_eigenvalue < -kBinTolerance) throw Error(ErrorKind::kNumeric, "Gram matrix is not semidefinite");
}

}  // namespace

std::vector<SpectrumItem> bin_spectrum(const std::vector<double>& eigenvalues) {
  std::vector<double> ev = eigenvalues;
  std::sort(ev.begin(), ev.end());
  std::vector<SpectrumItem> out;
  for (double x : ev) {
    const double snapped = std::abs(x - std::round(x)) < kBinTolerance ? std::round(x) + 0.0 : x;
    if (!out.empty() && std::abs(out.back().value - snapped) < kBinTolerance) {
      ++out.back().multiplicity;
    } else {
      out.push_back({snapped, 1});
    }
  }
  return out;
}

bool same_spectrum(const std::vector<SpectrumItem>& a, const std::vector<SpectrumItem>& b) {
  auto canon = [](const std::vector<SpectrumItem>& s) {
    std::map<long long, long long> m;  // keyed on value scaled to the bin tolerance
    for (const auto& it : s)
      if (it.multiplicity != 0) m[std::llround(it.value / kBinTolerance)] += it.multiplicity;
    return m;
  };
  return canon(a) == canon(b);
}

GramReport gl_spanning_gram(int q) {
  if (q > 7) throw Error(ErrorKind::kInvalidInput, "gl_spanning_gram supports q <= 7");
  const auto gl = group::GroupContext::build(group::Family::kGL, q);
  const int nvec = q * q - 1;
  const int cols = (q + 1) * nvec;
  // Column i * nvec + y holds S_{x_i, y}.
  std::vector<int> base(q + 1);
  for (int i = 0; i <= q; ++i) base[i] = gl.vector_index(gl.projective_vector(i));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(cols, cols);
  std::vector<int> hit(q + 1);
  for (int g = 0; g < gl.order(); ++g) {
    for (int i = 0; i <= q; ++i) hit[i] = i * nvec + gl.image(g, base[i]);
    for (int a : hit)
      for (int b : hit) m(a, b) += 1.0;
  }
  GramReport r;
  fill_spectrum(r, m);
  const double qd = q;
  r.printed = items({{qd * (qd * qd - 1), 1},
                     {qd * qd - 1, q * q},
                     {qd * (qd - 1), static_cast<long long>(q - 2) * (q + 1) * (q + 1)},
                     {0, 2 * q}});
  r.expected = r.printed;
  r.expected_rank = q * q * q + q * q - 3 * q - 1;
  return r;
}

GramReport sl_gram(int q) {
  if (q > 7) throw Error(ErrorKind::kInvalidInput, "sl_gram supports q <= 7");
  const auto sl = group::GroupContext::build(group::Family::kSL, q);
  const int n = sl.order();
  const int deg = sl.degree();
  Eigen::MatrixXd m(n, n);
  GramReport r;
  for (int g = 0; g < n; ++g) {
    const auto ig = sl.images(g);
    for (int h = 0; h < n; ++h) {
      const auto ih = sl.images(h);
      int agree = 0;
      for (int x = 0; x < deg; ++x) agree += ig[x] == ih[x];
      m(g, h) = agree;
      const auto tag = group::classify_matrix(sl.extension(), sl.matrix(sl.multiply(sl.inverse(h), g)));
      const bool unipotent = tag.category == group::Category::kC2 && tag.x == 1;
      const int predicted = (g == h ? q * q - 1 : 0) + (unipotent ? q - 1 : 0);
      r.identity_holds = r.identity_holds && agree == predicted;
    }
  }
  fill_spectrum(r, m);
  const double qd = q;
  const long long ql = q;
  const double top = qd * (qd * qd - 1);
  const double mid = (qd * qd - 1) + (qd - 1) * (qd - 1);
  if (q % 2 == 1) {
    r.printed = items({{mid, (ql - 3) * (ql + 1) * (ql + 1) / 2},
                       {qd * qd - 1, 2 * ql * ql},
                       {top, 1},
                       {0, (ql - 1) * (ql - 1) * (ql - 1) / 2 + 2 * ((ql - 1) / 2) * ((ql - 1) / 2)}});
  } else {
    r.printed = items({{top, 1},
                       {mid, (ql + 1) * (ql + 1) * (ql - 2) / 2},
                       {qd * qd - 1, 2 * ql * ql},
                       {0, ql * (ql - 1) * (ql - 1) / 2}});
  }
  r.expected = items({{top, 1},
                      {mid, (ql + 1) * (ql + 1) * (ql - 2) / 2},
                      {qd * qd - 1, ql * ql},
                      {0, ql * (ql - 1) * (ql - 1) / 2}});
  r.expected_rank = q * (q - 1) * (q + 3) / 2;
  return r;
}

double module_projection(const group::GroupContext& ctx, const chars::CharacterRow& psi,
                         const std::vector<int>& set) {
  // Class multiplicities of h g^-1 over S x S, then one pass over classes.
  std::vector<long long> count(ctx.classes().size(), 0);
  for (int g : set) {
    const int gi = ctx.inverse(g);
    for (int h : set) ++count[ctx.class_of(ctx.multiply(h, gi))];
  }
  chars::Complex total = 0.0;
  for (std::size_t k = 0; k < count.size(); ++k) total += static_cast<double>(count[k]) * psi.values[k];
  return psi.degree * total.real() / ctx.order();
}

chars::Complex character_sum(const group::GroupContext& ctx, const chars::CharacterRow& psi,
                             const std::vector<int>& set) {
  chars::Complex total = 0.0;
  for (int h : set) total += psi.values[ctx.class_of(h)];
  return total;
}

std::vector<int> permutation_constituents(const group::GroupContext& ctx, const chars::CharacterTable& table) {
  const auto& classes = ctx.classes();
  std::vector<int> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    chars::Complex mult = 0.0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      mult += static_cast<double>(classes[k].size) * classes[k].fix * std::conj(table.rows[r].values[k]);
    }
    if (mult.real() / ctx.order() > 0.5) out.push_back(static_cast<int>(r));
  }
  return out;
}

ProjectionReport projection_report(const group::GroupContext& ctx, const chars::CharacterTable& table,
                                   const std::vector<int>& set) {
  ProjectionReport rep;
  rep.constituents = permutation_constituents(ctx, table);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double norm = module_projection(ctx, table.rows[r], set);
    rep.norms.push_back(norm);
    const bool inside =
        std::find(rep.constituents.begin(), rep.constituents.end(), static_cast<int>(r)) != rep.constituents.end();
    if (!inside) rep.max_outside = std::max(rep.max_outside, std::abs(norm));
  }
  return rep;
}

std::vector<int> coset_slice_profile(const group::GroupContext& gl, const std::vector<int>& set) {
  if (gl.family() != group::Family::kGL) throw Error(ErrorKind::kInvalidInput, "coset profile needs a GL context");
  std::vector<int> out(gl.q() - 1, 0);
  for (int g : set) ++out[group::mat_det(gl.field(), gl.matrix(g)) - 1];
  return out;
}

nlohmann::json to_json(const GramReport& r) {
  auto spec = [](const std::vector<SpectrumItem>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& it : s) a.push_back({{"eigenvalue", it.value}, {"multiplicity", it.multiplicity}});
    return a;
  };
  return {{"side", r.side},
          {"rank", r.rank},
          {"expected_rank", r.expected_rank},
          {"observed", spec(r.observed)},
          {"printed", spec(r.printed)},
          {"expected", spec(r.expected)},
          {"printed_matches", r.printed_matches()},
          {"expected_matches", r.expected_matches()},
          {"identity_holds", r.identity_holds},
          {"min_eigenvalue", r.min_eigenvalue}};
}

}  // namespace ekr::checks
