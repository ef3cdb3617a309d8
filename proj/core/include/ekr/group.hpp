#pragma once

// Enumerated 2x2 linear, affine and projective groups over GF(q) together
// with the permutation actions whose derangement graphs we study:
//
//   GL(2,q), SL(2,q)   on the q^2-1 nonzero vectors of GF(q)^2
//   AGL(2,q)           on the q(q+1) lines of the affine plane AG(2,q)
//   PGL(2,q), PSL(2,q) on the q+1 points of the projective line
//
// Elements get dense ids: the identity is 0, the rest follow row-major order
// over (a, b, c, d) and then the translation part (z0, z1).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/bitgraph.hpp"
#include "ekr/gf.hpp"

namespace ekr::group {

using gf::Elem;

enum class Family { kGL, kSL, kAGL, kPGL, kPSL };

std::string_view family_name(Family f);
/// Accepts gl/sl/agl/pgl/psl in any case.
Family parse_family(std::string_view name);

struct Mat2 {
  Elem a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2&) const = default;
};

struct Vec2 {
  Elem x = 0, y = 0;
  bool operator==(const Vec2&) const = default;
};

Mat2 mat_mul(const gf::Field& f, const Mat2& m, const Mat2& n);
Vec2 mat_apply(const gf::Field& f, const Mat2& m, Vec2 v);
Elem mat_det(const gf::Field& f, const Mat2& m);
Mat2 mat_inv(const gf::Field& f, const Mat2& m);
Mat2 mat_scale(const gf::Field& f, Elem s, const Mat2& m);

/// The four families of GL(2,q) conjugacy classes, by eigenvalue structure.
enum class Category { kC1, kC2, kC3, kC4 };

struct CategoryTag {
  Category category = Category::kC1;
  Elem x = 0;  // c1, c2: the eigenvalue; c3: smaller eigenvalue id
  Elem y = 0;  // c3: larger eigenvalue id
  Elem z = 0;  // c4: eigenvalue in GF(q^2), the one of {z, z^q} with smaller log
};

std::string to_string(const CategoryTag& tag);
std::string_view category_name(Category c);

/// Category of a matrix from the roots of its characteristic polynomial.
CategoryTag classify_matrix(const gf::QuadraticExtension& ext, const Mat2& m);

struct ConjugacyClass {
  int representative = 0;
  int size = 0;
  int fix = 0;
  bool is_derangement = false;
  int inverse_class = 0;
  std::optional<CategoryTag> gl_category;  // GL and SL only
};

class GroupContext {
 public:
  static constexpr int kMaxOrder = 120000;

  /// Enumerates the group and its action. Supported: q <= 17 for the
  /// matrix and projective families, q <= 7 for AGL.
  static GroupContext build(Family family, int q);

  Family family() const { return family_; }
  int q() const { return q_; }
  const gf::Field& field() const { return ext_->base(); }
  const gf::QuadraticExtension& extension() const { return *ext_; }

  int order() const { return static_cast<int>(mats_.size()); }
  /// Size of the action domain.
  int degree() const { return degree_; }

  const Mat2& matrix(int g) const { return mats_[g]; }
  Vec2 shift(int g) const { return shifts_.empty() ? Vec2{} : shifts_[g]; }

  int identity() const { return 0; }
  int multiply(int g, int h) const;
  int inverse(int g) const { return inverse_[g]; }
  /// Dense id of the element with this matrix (and translation for AGL), or
  /// -1 when it is not in the group. Projective families normalize first.
  int find(const Mat2& m, Vec2 z = {}) const;

  int image(int g, int point) const {
    return images_[static_cast<std::size_t>(g) * degree_ + point];
  }
  std::span<const std::uint16_t> images(int g) const {
    return {images_.data() + static_cast<std::size_t>(g) * degree_,
            static_cast<std::size_t>(degree_)};
  }
  int fix_count(int g) const { return fix_[g]; }

  int class_of(int g) const { return class_of_[g]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::span<const int> class_members(int c) const {
    return {members_.data() + member_offsets_[c],
            static_cast<std::size_t>(member_offsets_[c + 1] - member_offsets_[c])};
  }
  std::vector<int> derangements() const;
  int derangement_count() const;

  std::span<const int> generators() const { return generators_; }

  // Point conventions.
  /// GL/SL domain: nonzero vector (x, y) has index x*q + y - 1.
  int vector_index(Vec2 v) const { return v.x * q_ + v.y - 1; }
  Vec2 vector_at(int index) const { return {(index + 1) / q_, (index + 1) % q_}; }
  /// Projective line: (1 : s) has index s, (0 : 1) has index q.
  int projective_index(Vec2 v) const;
  Vec2 projective_vector(int index) const;

  // AGL lines: id = direction * q + offset, where direction is the
  // projective index of the line's direction vector and offset is the value
  // of the linear functional vanishing on that direction.
  int line_direction(int line) const { return line / q_; }
  int line_offset(int line) const { return line % q_; }
  int line_of(Vec2 point, int direction) const;
  Vec2 line_base_point(int line) const;
  bool line_contains(int line, Vec2 point) const;

  /// Number of parallel classes (blocks) fixed setwise. AGL only.
  int fix_blocks(int g) const;
  int block_image(int g, int block) const;

 private:
  GroupContext() = default;
  int encode(const Mat2& m, Vec2 z) const;
  Mat2 normalize(const Mat2& m) const;
  void enumerate();
  void compute_action();
  void compute_generators();
  void compute_classes();
  int action_on(const Mat2& m, Vec2 z, int point) const;

  Family family_ = Family::kGL;
  int q_ = 0;
  int degree_ = 0;
  std::shared_ptr<const gf::QuadraticExtension> ext_;
  std::vector<Mat2> mats_;
  std::vector<Vec2> shifts_;
  std::vector<std::int32_t> code_;
  std::vector<int> inverse_;
  std::vector<std::uint16_t> images_;
  std::vector<std::uint16_t> fix_;
  std::vector<int> class_of_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> member_offsets_;
  std::vector<int> members_;
  std::vector<int> generators_;
};

/// Why an AGL element is or is not a derangement on lines.
enum class AglReason {
  kNoEigenvalue,            // derangement for every translation
  kUnipotentShiftOffAxis,   // sole eigenvalue 1, not diagonalizable, z off the eigenline
  kUnipotentShiftOnAxis,    // same matrix shape, z on the eigenline: fixes that line
  kSingleEigenvalueNotOne,  // not diagonalizable, eigenvalue != 1: fixes a shifted eigenline
  kTwoDistinctEigenvalues,  // fixes a shifted eigenline
  kScalar,                  // fixes the line through 0 and z
};

struct AglClassification {
  bool derangement = false;
  AglReason reason = AglReason::kScalar;
};

std::string_view reason_name(AglReason r);

/// Decides derangement status from the eigenstructure of M alone (plus z in
/// the unipotent case). Independent of the line action tables.
AglClassification classify_agl_derangement(const GroupContext& agl, int g);

/// Cayley graph h ~ h*s over a connection set closed under inverses.
BitGraph cayley_graph(const GroupContext& ctx, std::span<const int> connection);

/// g ~ h iff h^-1 g is a derangement. Requires order() <= 50000.
BitGraph derangement_graph(const GroupContext& ctx);

/// True iff h^-1 g fixes at most one projective point, i.e. the pair is not
/// 2-intersecting. PGL/PSL only.
bool two_fix_adjacency(const GroupContext& ctx, int g, int h);

/// The graph of two_fix_adjacency; its cocliques are 2-intersecting sets.
BitGraph two_fix_graph(const GroupContext& ctx);

/// Family, q, order, degree and the class table.
nlohmann::json inventory_json(const GroupContext& ctx);

}  // namespace ekr::group
