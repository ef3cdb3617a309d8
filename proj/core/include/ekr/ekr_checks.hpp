#pragma once

// Gram spectra of canonical characteristic vectors, module projections and
// determinant-coset profiles.

#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/characters.hpp"
#include "ekr/group.hpp"

namespace ekr::checks {

struct SpectrumItem {
  double value = 0.0;
  long long multiplicity = 0;
};

/// Sorted eigenvalues grouped within 1e-6; values within 1e-6 of an integer
/// are snapped to it.
std::vector<SpectrumItem> bin_spectrum(const std::vector<double>& eigenvalues);

/// Equal as multisets after dropping zero multiplicities.
bool same_spectrum(const std::vector<SpectrumItem>& a, const std::vector<SpectrumItem>& b);

struct GramReport {
  int side = 0;
  std::vector<SpectrumItem> observed;
  std::vector<SpectrumItem> printed;   // the closed form as stated
  std::vector<SpectrumItem> expected;  // the closed form that sums to side
  int rank = 0;
  int expected_rank = 0;
  double min_eigenvalue = 0.0;
  bool identity_holds = true;  // entrywise decomposition (SL only)

  bool rank_matches() const { return rank == expected_rank; }
  bool printed_matches() const { return same_spectrum(observed, printed); }
  bool expected_matches() const { return same_spectrum(observed, expected); }
};

/// N^T N for the columns v_{x_i, y}: x_i the canonical projective
/// representatives 0..q, y every nonzero vector. q <= 7.
GramReport gl_spanning_gram(int q);

/// N N^T over all domain pairs of SL(2,q), checked entrywise against
/// (q^2-1) I + (q-1) A with A the nontrivial unipotent classes. q <= 7.
GramReport sl_gram(int q);

/// (psi(1)/|G|) sum_{g,h in S} psi(h g^-1), the squared norm of the
/// psi-isotypic projection of the characteristic vector of S.
double module_projection(const group::GroupContext& ctx, const chars::CharacterRow& psi,
                         const std::vector<int>& set);

/// sum_{h in S} psi(h).
chars::Complex character_sum(const group::GroupContext& ctx, const chars::CharacterRow& psi,
                             const std::vector<int>& set);

/// Rows of `table` that occur in the permutation character.
std::vector<int> permutation_constituents(const group::GroupContext& ctx, const chars::CharacterTable& table);

struct ProjectionReport {
  std::vector<double> norms;  // per table row
  std::vector<int> constituents;
  double max_outside = 0.0;  // largest norm over non-constituent rows
};
ProjectionReport projection_report(const group::GroupContext& ctx, const chars::CharacterTable& table,
                                   const std::vector<int>& set);

/// |S cap x SL| for each determinant value x = 1..q-1, in field id order. GL only.
std::vector<int> coset_slice_profile(const group::GroupContext& gl, const std::vector<int>& set);

nlohmann::json to_json(const GramReport& r);

}  // namespace ekr::checks
