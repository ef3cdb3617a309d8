#pragma once

// Character data for the derangement-graph eigenvalue formula.
//
// Two sources produce the same CharacterTable shape:
//   * the explicit GL(2,q) table, evaluated cell by cell from discrete logs;
//   * central characters of any enumerated group, recovered numerically from
//     class-algebra structure constants.
// Rows are indexed like GroupContext::classes().

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "ekr/group.hpp"

namespace ekr::chars {

using Complex = std::complex<double>;
using Rational = boost::rational<long long>;

struct CharacterRow {
  std::string label;
  int degree = 0;
  std::vector<Complex> values;  // chi(representative of class k)
};

struct CharacterTable {
  std::vector<CharacterRow> rows;  // row 0 is the trivial character
};

// ---------------------------------------------------------------- GL(2,q)

enum class GLFamily { kRhoPrime, kRhoBar, kPi, kRho };

/// rho'(alpha), rho_bar(alpha): alpha = a mod q-1.
/// pi(chi): chi = c mod q^2-1, one of {c, cq} with cq != c.
/// rho(alpha, beta): unordered a != b mod q-1.
struct GLCharacter {
  GLFamily family = GLFamily::kRhoPrime;
  int a = 0;
  int b = 0;
  int c = 0;
  int degree = 1;
  std::string label() const;
};

/// All irreducible characters of GL(2,q); the trivial one comes first.
std::vector<GLCharacter> gl_characters(int q);

/// One cell of the GL(2,q) character table.
Complex gl_char_value(const gf::QuadraticExtension& ext, const GLCharacter& chi,
                      const group::CategoryTag& cls);

/// Explicit table on the classes of a GL context.
CharacterTable gl_character_table(const group::GroupContext& gl);

/// 1 + rho_bar(1) + sum_beta rho(1, beta) on one class; throws kVerification
/// when it disagrees with `expected_fix` (pass a negative value to skip).
int gl_permutation_character(const gf::QuadraticExtension& ext, const group::CategoryTag& cls,
                             int expected_fix = -1);

// ---------------------------------------------- class algebra (any family)

/// a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}, z_k the representative of C_k.
class StructureConstants {
 public:
  static constexpr int kMaxClasses = 120;

  static StructureConstants compute(const group::GroupContext& ctx);

  int class_count() const { return n_; }
  std::int64_t operator()(int i, int j, int k) const {
    return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  const std::vector<int>& sizes() const { return sizes_; }
  std::int64_t group_order() const { return order_; }
  int identity_class() const { return identity_class_; }

 private:
  int n_ = 0;
  std::int64_t order_ = 0;
  int identity_class_ = 0;
  std::vector<int> sizes_;
  std::vector<std::int64_t> a_;
};

struct CentralCharacterTable {
  std::vector<std::vector<Complex>> omega;  // omega[chi][k] = |C_k| chi(z_k) / chi(1)
  std::vector<int> degrees;
  int reseeds = 0;
  double max_residual = 0.0;  // relative eigen-equation residual after polishing
};

inline constexpr std::uint64_t kCentralCharacterSeed = 0x5eed'c1a5'5a1bULL;

/// Simultaneous eigenvectors of the class-multiplication matrices. Throws
/// kNumeric on an eigenvalue collision that survives five reseeds or on a
/// failed residual or degree check.
CentralCharacterTable central_characters(const StructureConstants& sc,
                                         std::uint64_t seed = kCentralCharacterSeed);

/// Characters chi(z_k) = d * omega_k / |C_k|, sorted by (degree, label) with
/// the trivial character first. Labels are "chi<i>".
CharacterTable character_table_from_central(const CentralCharacterTable& cc,
                                            const std::vector<int>& class_sizes);

/// Explicit table for GL, central characters for every other family.
CharacterTable character_table(const group::GroupContext& ctx, std::uint64_t seed = kCentralCharacterSeed);

// ---------------------------------------------------- SL category sums

/// One row of the SL(2,q) derangement-category sum tables: the character
/// summed over the derangement classes of each category (class values, not
/// weighted by size), with the weighted eigenvalue as printed.
struct SLCategoryRow {
  std::string label;
  long long degree = 0;
  long long count = 0;  // number of characters sharing this row
  Rational sums[4];
  Rational printed_eigenvalue;
};

struct SLCategoryTable {
  std::string name;  // descriptive label of the mirrored table
  std::vector<SLCategoryRow> rows;
};

/// The transcribed rows for q = 1 mod 4, q = 3 mod 4, or q even.
SLCategoryTable sl_category_sums(int q);

nlohmann::json to_json(const CharacterTable& t);

}  // namespace ekr::chars
