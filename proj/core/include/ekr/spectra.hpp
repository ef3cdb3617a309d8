#pragma once

// Weighted derangement-graph eigenvalues from character data, the ratio and
// clique-coclique bounds, and rational evaluation of the category-sum tables.

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/characters.hpp"
#include "ekr/group.hpp"

namespace ekr::spectra {

using chars::Complex;
using chars::Rational;

/// One weight per conjugacy class; zero off the derangement classes.
using Weights = std::vector<double>;

Weights unit_weights(const group::GroupContext& ctx);

/// Category weights of the canonical weighting, indexed c1..c4.
struct CategoryWeights {
  Rational w[4];
};

/// GL: -(q-1)/(q(q-2)), 1/(q(q-2)), 1/(q(q-3)), 1/(q(q-1)); c3 is 0 at q = 3.
CategoryWeights gl_category_weights(int q);
/// SL, q odd: 0, 1/(q-1), 1/q, (q^2-3)/(q(q-1)^2). q even: c3 1/q, c4 (q+2)/q^2.
CategoryWeights sl_category_weights(int q);

/// Per-class category sizes used with the tables: GL (1, q^2-1, q(q+1),
/// q(q-1)); SL odd (1, (q^2-1)/2, q(q+1), q(q-1)).
std::array<long long, 4> gl_category_sizes(int q);
std::array<long long, 4> sl_category_sizes(int q);

/// The canonical weighting spread over the classes of a GL or SL context.
std::vector<Rational> canonical_weights_exact(const group::GroupContext& ctx);
Weights canonical_weights(const group::GroupContext& ctx);

/// (1/chi(1)) sum_k w_k |C_k| chi(z_k). Throws kNumeric when the imaginary
/// part exceeds 1e-8 (relative), which means the weights are not inverse-tied.
double eigenvalue(const group::GroupContext& ctx, const chars::CharacterRow& chi, const Weights& w);

struct SpectrumEntry {
  std::string label;
  double eigenvalue = 0.0;
  long long multiplicity = 0;  // degree^2
};

struct SpectrumReport {
  long long order = 0;
  std::vector<SpectrumEntry> entries;  // one per character, table order
  double max = 0.0;
  double min = 0.0;

  /// Distinct eigenvalues (merged within 1e-6), descending, with summed
  /// multiplicities.
  std::vector<std::pair<double, long long>> distinct() const;
};

SpectrumReport spectrum(const group::GroupContext& ctx, const chars::CharacterTable& table,
                        const Weights& w);

/// |V| / (1 - d/tau) with d the largest and tau the least eigenvalue.
double ratio_bound(const SpectrumReport& report);

long long clique_coclique_bound(long long order, long long clique_size);

/// Sorted eigenvalues of the dense weighted Cayley matrix W(g,h) = w[class(g^-1 h)].
/// Requires order <= 500.
std::vector<double> numeric_spectrum(const group::GroupContext& ctx, const Weights& w);

// ------------------------------------------------ rational table evaluation

/// (1/degree) sum_c weight_c * size_c * sums_c in exact arithmetic.
Rational category_eigenvalue(const Rational (&sums)[4], long long degree,
                             const std::array<long long, 4>& sizes, const CategoryWeights& w);

/// A transcribed row of the GL category-sum table together with the printed
/// unit-weight and canonical-weight eigenvalues.
struct GLTableRow {
  std::string label;
  long long degree = 0;
  long long count = 0;
  Rational sums[4];
  Rational printed_unit;
  Rational printed_weighted;
};

/// Rows that exist at this q (count > 0). Counts use the odd/even
/// alternatives as printed.
std::vector<GLTableRow> gl_category_table(int q);

/// Which transcribed row an explicit GL character belongs to.
std::string gl_table_row_of(const chars::GLCharacter& chi, int q);

struct RationalRowCheck {
  std::string label;
  long long degree = 0;
  long long count = 0;
  Rational computed;
  Rational printed;
  bool matches = false;
};

struct RationalTableCheck {
  std::string name;
  std::vector<RationalRowCheck> rows;
  Rational max;
  Rational min;
  Rational ratio;  // |G| / (1 - max/min)
  long long order = 0;
  bool all_match() const;
};

/// GL rows under unit weights (printed = the unit-eigenvalue column).
RationalTableCheck gl_unit_check(int q);
/// GL rows under the canonical weights (printed = the weighted column).
RationalTableCheck gl_weighted_check(int q);
/// SL rows under the canonical weights.
RationalTableCheck sl_weighted_check(int q);

nlohmann::json to_json(const SpectrumReport& r);
nlohmann::json to_json(const RationalTableCheck& c);
/// Aligned text: label, eigenvalue, multiplicity.
std::string to_text(const SpectrumReport& r);
std::string to_csv(const SpectrumReport& r);
std::string to_text(const RationalTableCheck& c);

std::string format_rational(const Rational& r);

}  // namespace ekr::spectra
