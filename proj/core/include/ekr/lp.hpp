#pragma once

// The class-weight linear program: maximize the trivial-character eigenvalue
// sum_i a_i |D_i| subject to every other eigenvalue being at least -1.
//
// Weights are free in sign. A dense tableau simplex runs on the split
// a = u - l with the slack basis as start (a = 0 is feasible).

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/characters.hpp"
#include "ekr/group.hpp"
#include "ekr/spectra.hpp"

namespace ekr::lp {

struct LPInstance {
  bool tied = true;
  std::vector<std::vector<int>> variable_classes;  // class indices sharing a weight
  std::vector<double> objective;                   // sum of class sizes per variable
  std::vector<std::string> constraint_labels;      // one per nontrivial character
  std::vector<std::vector<double>> rows;           // eigenvalue coefficient per variable
  double max_imag_residual = 0.0;
};

/// One variable per inverse-closed pair of derangement classes when `tie`
/// is set, one per class otherwise (then only real parts enter). Throws
/// kNumeric when a tied coefficient has an imaginary part above 1e-8.
LPInstance build_lp(const group::GroupContext& ctx, const chars::CharacterTable& table, bool tie = true);

enum class LPStatus { kOptimal, kUnbounded, kIterationLimit, kInfeasibleNumeric };
std::string_view status_name(LPStatus s);

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  int max_iterations = 50000;
  int degenerate_before_bland = 50;
};

struct LPResult {
  LPStatus status = LPStatus::kOptimal;
  double objective = 0.0;
  std::vector<double> weights;  // per variable
  std::vector<std::string> tight;
  int iterations = 0;
  bool used_bland = false;
  double max_violation = 0.0;  // of eta >= -1 over all rows, after re-evaluation
  std::vector<double> ray;     // improving direction when unbounded
  long long rounded = 0;
  bool integral = false;  // |objective - rounded| < 1e-5
};

LPResult solve_lp(const LPInstance& instance, const SimplexOptions& options = {});

/// Weights spread back onto the classes of the context.
spectra::Weights class_weights(const group::GroupContext& ctx, const LPInstance& instance,
                               const LPResult& result);

struct CeilingReport {
  double lambda = 0.0;
  int degree = 0;
  bool within_ceiling = false;  // lambda <= n - 1 + 1e-7
  bool attains_ceiling = false;
  std::vector<std::string> constituents;  // nontrivial permutation-character constituents
  bool constituents_tight = false;
};

CeilingReport lp_ceiling_check(const group::GroupContext& ctx, const chars::CharacterTable& table,
                               const LPResult& result);

/// The two rank-3 eigenvalues of AGL(2,q) on lines for the solved weights,
/// evaluated from fix counts, next to their closed forms.
struct AglRank3Check {
  double a0 = 0.0;      // weight on the unipotent derangement class
  double sum_ai = 0.0;  // summed weights on the no-eigenvalue classes
  double lambda_chi1 = 0.0;
  double closed_chi1 = 0.0;  // -q^2 (q-1) sum a_i
  double lambda_chi2 = 0.0;
  double closed_chi2 = 0.0;  // -a0 (q^2 - q)
  bool a0_within = false;    // a0 <= 1/(q^2-q)
  bool sum_within = false;   // sum a_i <= 1/(q^2 (q-1))
  bool closed_forms_hold = false;
};

AglRank3Check agl_rank3_check(const group::GroupContext& agl, const spectra::Weights& class_weights);

/// Plain-text instance: variables, objective, one constraint row per line.
std::string to_text(const LPInstance& instance);
nlohmann::json to_json(const LPResult& result);

}  // namespace ekr::lp
