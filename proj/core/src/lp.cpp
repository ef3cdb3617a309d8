#include "ekr/lp.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::lp {

LPInstance build_lp(const group::GroupContext& ctx, const chars::CharacterTable& table, bool tie) {
  LPInstance inst;
  inst.tied = tie;
  const auto& classes = ctx.classes();
  std::vector<bool> seen(classes.size(), false);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (!classes[k].is_derangement || seen[k]) continue;
    std::vector<int> group{static_cast<int>(k)};
    seen[k] = true;
    const auto inv = static_cast<std::size_t>(classes[k].inverse_class);
    if (tie && inv != k) {
      group.push_back(static_cast<int>(inv));
      seen[inv] = true;
    }
    double size = 0;
    for (int c : group) size += classes[c].size;
    inst.variable_classes.push_back(std::move(group));
    inst.objective.push_back(size);
  }

  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const auto& chi = table.rows[r];
    std::vector<double> row;
    for (const auto& group : inst.variable_classes) {
      chars::Complex coef = 0.0;
      for (int c : group) coef += static_cast<double>(classes[c].size) * chi.values[c];
      coef /= static_cast<double>(chi.degree);
      if (tie) {
        const double rel = std::abs(coef.imag()) / std::max(1.0, std::abs(coef));
        inst.max_imag_residual = std::max(inst.max_imag_residual, rel);
        if (rel > 1e-8) {
          throw Error(ErrorKind::kNumeric,
                      fmt::format("tied coefficient of {} has imaginary part {:.3g}", chi.label, coef.imag()));
        }
      }
      row.push_back(coef.real());
    }
    inst.constraint_labels.push_back(chi.label);
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

std::string_view status_name(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kUnbounded: return "unbounded";
    case LPStatus::kIterationLimit: return "iteration-limit";
    case LPStatus::kInfeasibleNumeric: return "infeasible-numeric";
  }
  return "?";
}

LPResult solve_lp(const LPInstance& instance, const SimplexOptions& options) {
  const int nv = static_cast<int>(instance.objective.size());
  const int m = static_cast<int>(instance.rows.size());
  const int ncols = 2 * nv + m;  // u, l, slacks
  const double tol = options.pivot_tolerance;

  // Rows: -eta(u - l) + s = 1, so eta >= -1. Objective row holds -c.
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(ncols + 1, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < nv; ++v) {
      t[i][v] = -instance.rows[i][v];
      t[i][nv + v] = instance.rows[i][v];
    }
    t[i][2 * nv + i] = 1.0;
    t[i][ncols] = 1.0;
  }
  for (int v = 0; v < nv; ++v) {
    t[m][v] = -instance.objective[v];
    t[m][nv + v] = instance.objective[v];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * nv + i;

  LPResult res;
  bool bland = false;
  int degenerate_run = 0;
  while (true) {
    if (res.iterations >= options.max_iterations) {
      res.status = LPStatus::kIterationLimit;
      break;
    }
    int enter = -1;
    double best = -tol;
    for (int j = 0; j < ncols; ++j) {
      if (t[m][j] < best) {
        enter = j;
        if (bland) break;
        best = t[m][j];
      }
    }
    if (enter < 0) {
      res.status = LPStatus::kOptimal;
      break;
    }
    int leave = -1;
    double ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= tol) continue;
      const double r = t[i][ncols] / t[i][enter];
      if (leave < 0 || r < ratio - 1e-12 || (std::abs(r - ratio) <= 1e-12 && basis[i] < basis[leave])) {
        leave = i;
        ratio = r;
      }
    }
    if (leave < 0) {
      res.status = LPStatus::kUnbounded;
      std::vector<double> dir(ncols, 0.0);
      dir[enter] = 1.0;
      for (int i = 0; i < m; ++i) dir[basis[i]] = -t[i][enter];
      for (int v = 0; v < nv; ++v) res.ray.push_back(dir[v] - dir[nv + v]);
      break;
    }
    degenerate_run = ratio <= 1e-12 ? degenerate_run + 1 : 0;
    if (!bland && degenerate_run >= options.degenerate_before_bland) {
      bland = true;
      res.used_bland = true;
    }

    const double piv = t[leave][enter];
    for (double& x : t[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++res.iterations;
  }

  std::vector<double> x(ncols, 0.0);
  for (int i = 0; i < m; ++i) x[basis[i]] = t[i][ncols];
  res.weights.assign(nv, 0.0);
  for (int v = 0; v < nv; ++v) res.weights[v] = x[v] - x[nv + v];

  // Re-evaluate from the instance, not the tableau.
  res.objective = 0.0;
  for (int v = 0; v < nv; ++v) res.objective += instance.objective[v] * res.weights[v];
  for (int i = 0; i < m; ++i) {
    double eta = 0.0;
    for (int v = 0; v < nv; ++v) eta += instance.rows[i][v] * res.weights[v];
    res.max_violation = std::max(res.max_violation, -1.0 - eta);
    if (eta <= -1.0 + 1e-7) res.tight.push_back(instance.constraint_labels[i]);
  }
  if (res.status == LPStatus::kOptimal && res.max_violation > 1e-7) res.status = LPStatus::kInfeasibleNumeric;
  res.rounded = std::llround(res.objective);
  res.integral = std::abs(res.objective - static_cast<double>(res.rounded)) < 1e-5;
  return res;
}

spectra::Weights class_weights(const group::GroupContext& ctx, const LPInstance& instance,
                               const LPResult& result) {
  spectra::Weights w(ctx.classes().size(), 0.0);
  for (std::size_t v = 0; v < instance.variable_classes.size(); ++v)
    for (int c : instance.variable_classes[v]) w[c] = result.weights[v];
  return w;
}

CeilingReport lp_ceiling_check(const group::GroupContext& ctx, const chars::CharacterTable& table,
                               const LPResult& result) {
  CeilingReport rep;
  rep.lambda = result.objective;
  rep.degree = ctx.degree();
  rep.within_ceiling = rep.lambda <= rep.degree - 1 + 1e-7;
  rep.attains_ceiling = std::abs(rep.lambda - (rep.degree - 1)) < 1e-6;

  const auto& classes = ctx.classes();
  rep.constituents_tight = true;
  for (std::size_t r = 1; r < table.rows.size(); ++r) {
    const auto& chi = table.rows[r];
    chars::Complex mult = 0.0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      mult += static_cast<double>(classes[k].size) * static_cast<double>(classes[k].fix) * std::conj(chi.values[k]);
    }
    mult /= static_cast<double>(ctx.order());
    if (mult.real() < 0.5) continue;
    rep.constituents.push_back(chi.label);
    const bool tight = std::find(result.tight.begin(), result.tight.end(), chi.label) != result.tight.end();
    rep.constituents_tight = rep.constituents_tight && tight;
  }
  return rep;
}

AglRank3Check agl_rank3_check(const group::GroupContext& agl, const spectra::Weights& w) {
  if (agl.family() != group::Family::kAGL) {
    throw Error(ErrorKind::kInvalidInput, "rank-3 check needs an AGL context");
  }
  const double q = agl.q();
  AglRank3Check c;
  const auto& classes = agl.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    if (!cls.is_derangement) continue;
    const int rep = cls.representative;
    const int fb = agl.fix_blocks(rep);
    const double chi1 = fb - 1;
    const double chi2 = cls.fix - fb;
    c.lambda_chi1 += w[k] * cls.size * chi1 / q;
    c.lambda_chi2 += w[k] * cls.size * chi2 / (q * q - 1);
    const auto why = group::classify_agl_derangement(agl, rep).reason;
    if (why == group::AglReason::kUnipotentShiftOffAxis) c.a0 = w[k];
    if (why == group::AglReason::kNoEigenvalue) c.sum_ai += w[k];
  }
  c.closed_chi1 = -q * q * (q - 1) * c.sum_ai;
  c.closed_chi2 = -c.a0 * (q * q - q);
  c.closed_forms_hold = std::abs(c.lambda_chi1 - c.closed_chi1) < 1e-9 * std::max(1.0, std::abs(c.closed_chi1)) &&
                        std::abs(c.lambda_chi2 - c.closed_chi2) < 1e-9 * std::max(1.0, std::abs(c.closed_chi2));
  c.a0_within = c.a0 <= 1.0 / (q * q - q) + 1e-9;
  c.sum_within = c.sum_ai <= 1.0 / (q * q * (q - 1)) + 1e-9;
  return c;
}

std::string to_text(const LPInstance& instance) {
  std::string out = fmt::format("# maximize sum_v objective[v] * a[v]  s.t.  row . a >= -1, a free\n");
  out += fmt::format("variables {}\nconstraints {}\n", instance.objective.size(), instance.rows.size());
  for (std::size_t v = 0; v < instance.variable_classes.size(); ++v) {
    out += fmt::format("var a{} classes", v);
    for (int c : instance.variable_classes[v]) out += fmt::format(" {}", c);
    out += fmt::format(" objective {:.17g}\n", instance.objective[v]);
  }
  for (std::size_t i = 0; i < instance.rows.size(); ++i) {
    out += fmt::format("row {}", instance.constraint_labels[i]);
    for (double x : instance.rows[i]) out += fmt::format(" {:.17g}", x);
    out += " >= -1\n";
  }
  return out;
}

nlohmann::json to_json(const LPResult& r) {
  return {{"status", status_name(r.status)},
          {"objective", r.objective},
          {"rounded", r.rounded},
          {"integral", r.integral},
          {"weights", r.weights},
          {"tight", r.tight},
          {"iterations", r.iterations},
          {"used_bland", r.used_bland},
          {"max_violation", r.max_violation}};
}

}  // namespace ekr::lp
