#include "ekr/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <string>

#include "ekr/error.hpp"

namespace ekr::group {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kGL: return "GL";
    case Family::kSL: return "SL";
    case Family::kAGL: return "AGL";
    case Family::kPGL: return "PGL";
    case Family::kPSL: return "PSL";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string s(name);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "gl") return Family::kGL;
  if (s == "sl") return Family::kSL;
  if (s == "agl") return Family::kAGL;
  if (s == "pgl") return Family::kPGL;
  if (s == "psl") return Family::kPSL;
  throw Error(ErrorKind::kInvalidInput, "unknown group family '" + std::string(name) + "'");
}

Mat2 mat_mul(const gf::Field& f, const Mat2& m, const Mat2& n) {
  return {f.add(f.mul(m.a, n.a), f.mul(m.b, n.c)), f.add(f.mul(m.a, n.b), f.mul(m.b, n.d)),
          f.add(f.mul(m.c, n.a), f.mul(m.d, n.c)), f.add(f.mul(m.c, n.b), f.mul(m.d, n.d))};
}

Vec2 mat_apply(const gf::Field& f, const Mat2& m, Vec2 v) {
  return {f.add(f.mul(m.a, v.x), f.mul(m.b, v.y)), f.add(f.mul(m.c, v.x), f.mul(m.d, v.y))};
}

Elem mat_det(const gf::Field& f, const Mat2& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

Mat2 mat_inv(const gf::Field& f, const Mat2& m) {
  const Elem di = f.inv(mat_det(f, m));
  return {f.mul(m.d, di), f.mul(f.neg(m.b), di), f.mul(f.neg(m.c), di), f.mul(m.a, di)};
}

Mat2 mat_scale(const gf::Field& f, Elem s, const Mat2& m) {
  return {f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::kC1: return "c1";
    case Category::kC2: return "c2";
    case Category::kC3: return "c3";
    case Category::kC4: return "c4";
  }
  return "?";
}

std::string to_string(const CategoryTag& tag) {
  std::string s(category_name(tag.category));
  switch (tag.category) {
    case Category::kC1:
    case Category::kC2: return s + "(" + std::to_string(tag.x) + ")";
    case Category::kC3: return s + "(" + std::to_string(tag.x) + "," + std::to_string(tag.y) + ")";
    case Category::kC4: return s + "(z=" + std::to_string(tag.z) + ")";
  }
  return s;
}

CategoryTag classify_matrix(const gf::QuadraticExtension& ext, const Mat2& m) {
  const auto& f = ext.base();
  const Elem tr = f.add(m.a, m.d);
  const Elem det = mat_det(f, m);
  std::vector<Elem> roots;
  for (Elem x = 0; x < f.order(); ++x) {
    if (f.add(f.sub(f.mul(x, x), f.mul(tr, x)), det) == 0) roots.push_back(x);
  }
  CategoryTag tag;
  if (roots.size() == 2) {
    tag.category = Category::kC3;
    tag.x = roots[0];
    tag.y = roots[1];
  } else if (roots.size() == 1) {
    const bool scalar = m.b == 0 && m.c == 0 && m.a == m.d;
    tag.category = scalar ? Category::kC1 : Category::kC2;
    tag.x = roots[0];
  } else {
    tag.category = Category::kC4;
    const auto& e = ext.ext();
    const Elem etr = ext.embed(tr);
    const Elem edet = ext.embed(det);
    for (Elem z = 0; z < e.order(); ++z) {
      if (e.add(e.sub(e.mul(z, z), e.mul(etr, z)), edet) == 0) {
        const Elem zc = ext.conj(z);
        tag.z = e.log(z) <= e.log(zc) ? z : zc;
        break;
      }
    }
  }
  return tag;
}

GroupContext GroupContext::build(Family family, int q) {
  if (!gf::prime_power(q)) {
    throw Error(ErrorKind::kInvalidInput, "q=" + std::to_string(q) + " is not a prime power");
  }
  const int max_q = family == Family::kAGL ? 7 : 17;
  if (q > max_q) {
    throw Error(ErrorKind::kBudget, std::string(family_name(family)) + "(2," + std::to_string(q) +
                                        ") exceeds the enumeration budget (q <= " +
                                        std::to_string(max_q) + ")");
  }
  GroupContext ctx;
  ctx.family_ = family;
  ctx.q_ = q;
  ctx.ext_ = std::make_shared<const gf::QuadraticExtension>(gf::Field::make(q));
  switch (family) {
    case Family::kGL:
    case Family::kSL: ctx.degree_ = q * q - 1; break;
    case Family::kAGL: ctx.degree_ = q * (q + 1); break;
    case Family::kPGL:
    case Family::kPSL: ctx.degree_ = q + 1; break;
  }
  ctx.enumerate();
  ctx.compute_action();
  ctx.compute_generators();
  ctx.compute_classes();
  return ctx;
}

int GroupContext::encode(const Mat2& m, Vec2 z) const {
  int code = ((m.a * q_ + m.b) * q_ + m.c) * q_ + m.d;
  if (family_ == Family::kAGL) code = (code * q_ + z.x) * q_ + z.y;
  return code;
}

Mat2 GroupContext::normalize(const Mat2& m) const {
  const Elem lead = m.a != 0 ? m.a : m.b != 0 ? m.b : m.c != 0 ? m.c : m.d;
  return mat_scale(field(), field().inv(lead), m);
}

void GroupContext::enumerate() {
  const auto& f = field();
  const bool projective = family_ == Family::kPGL || family_ == Family::kPSL;
  std::vector<Mat2> linear;
  for (Elem a = 0; a < q_; ++a)
    for (Elem b = 0; b < q_; ++b)
      for (Elem c = 0; c < q_; ++c)
        for (Elem d = 0; d < q_; ++d) {
          const Mat2 m{a, b, c, d};
          const Elem det = mat_det(f, m);
          if (det == 0) continue;
          if (family_ == Family::kSL && det != 1) continue;
          if (projective && !(normalize(m) == m)) continue;
          if (family_ == Family::kPSL && !f.is_square(det)) continue;
          linear.push_back(m);
        }

  const std::size_t n = family_ == Family::kAGL ? linear.size() * q_ * q_ : linear.size();
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorKind::kBudget, "group order exceeds the enumeration budget");
  }
  mats_.reserve(n);
  if (family_ == Family::kAGL) {
    shifts_.reserve(n);
    for (const auto& m : linear)
      for (Elem x = 0; x < q_; ++x)
        for (Elem y = 0; y < q_; ++y) {
          mats_.push_back(m);
          shifts_.push_back({x, y});
        }
  } else {
    mats_ = linear;
  }

  // Identity first; everything else keeps enumeration order.
  const Mat2 id{};
  std::size_t pos = 0;
  while (!(mats_[pos] == id && (shifts_.empty() || shifts_[pos] == Vec2{}))) ++pos;
  std::rotate(mats_.begin(), mats_.begin() + pos, mats_.begin() + pos + 1);
  if (!shifts_.empty()) std::rotate(shifts_.begin(), shifts_.begin() + pos, shifts_.begin() + pos + 1);

  std::size_t code_size = static_cast<std::size_t>(q_) * q_ * q_ * q_;
  if (family_ == Family::kAGL) code_size *= static_cast<std::size_t>(q_) * q_;
  code_.assign(code_size, -1);
  for (int g = 0; g < order(); ++g) code_[encode(mats_[g], shift(g))] = g;

  inverse_.resize(order());
  for (int g = 0; g < order(); ++g) {
    const Mat2 mi = mat_inv(f, mats_[g]);
    Vec2 zi{};
    if (family_ == Family::kAGL) {
      const Vec2 t = mat_apply(f, mi, shifts_[g]);
      zi = {f.neg(t.x), f.neg(t.y)};
    }
    inverse_[g] = find(mi, zi);
  }
}

int GroupContext::find(const Mat2& m, Vec2 z) const {
  if (mat_det(field(), m) == 0) return -1;
  const Mat2 key = (family_ == Family::kPGL || family_ == Family::kPSL) ? normalize(m) : m;
  return code_[encode(key, z)];
}

int GroupContext::multiply(int g, int h) const {
  const auto& f = field();
  const Mat2 m = mat_mul(f, mats_[g], mats_[h]);
  Vec2 z{};
  if (family_ == Family::kAGL) {
    const Vec2 t = mat_apply(f, mats_[g], shifts_[h]);
    z = {f.add(t.x, shifts_[g].x), f.add(t.y, shifts_[g].y)};
  }
  return find(m, z);
}

int GroupContext::projective_index(Vec2 v) const {
  const auto& f = field();
  if (v.x != 0) return f.div(v.y, v.x);
  return q_;
}

Vec2 GroupContext::projective_vector(int index) const {
  if (index == q_) return {0, 1};
  return {1, index};
}

int GroupContext::line_of(Vec2 point, int direction) const {
  const auto& f = field();
  const int offset = direction == q_ ? point.x : f.sub(point.y, f.mul(direction, point.x));
  return direction * q_ + offset;
}

Vec2 GroupContext::line_base_point(int line) const {
  const int dir = line_direction(line);
  const int off = line_offset(line);
  return dir == q_ ? Vec2{off, 0} : Vec2{0, off};
}

bool GroupContext::line_contains(int line, Vec2 point) const {
  return line_of(point, line_direction(line)) == line;
}

int GroupContext::action_on(const Mat2& m, Vec2 z, int point) const {
  const auto& f = field();
  switch (family_) {
    case Family::kGL:
    case Family::kSL: return vector_index(mat_apply(f, m, vector_at(point)));
    case Family::kPGL:
    case Family::kPSL: return projective_index(mat_apply(f, m, projective_vector(point)));
    case Family::kAGL: {
      const int dir = projective_index(mat_apply(f, m, projective_vector(line_direction(point))));
      const Vec2 u = mat_apply(f, m, line_base_point(point));
      return line_of({f.add(u.x, z.x), f.add(u.y, z.y)}, dir);
    }
  }
  return -1;
}

void GroupContext::compute_action() {
  images_.resize(static_cast<std::size_t>(order()) * degree_);
  fix_.resize(order());
  for (int g = 0; g < order(); ++g) {
    int fixed = 0;
    for (int x = 0; x < degree_; ++x) {
      const int y = action_on(mats_[g], shift(g), x);
      images_[static_cast<std::size_t>(g) * degree_ + x] = static_cast<std::uint16_t>(y);
      fixed += (x == y);
    }
    fix_[g] = static_cast<std::uint16_t>(fixed);
  }
}

void GroupContext::compute_generators() {
  const auto& f = field();
  const int p = f.characteristic();
  std::vector<Elem> basis;  // 1, t, ..., t^{k-1} as ids p^i
  for (int i = 0, v = 1; i < f.degree(); ++i, v *= p) basis.push_back(v);

  std::vector<std::pair<Mat2, Vec2>> gens;
  for (Elem t : basis) {
    gens.push_back({Mat2{1, t, 0, 1}, {}});
    gens.push_back({Mat2{1, 0, t, 1}, {}});
  }
  if (family_ == Family::kGL || family_ == Family::kAGL || family_ == Family::kPGL) {
    gens.push_back({Mat2{f.primitive(), 0, 0, 1}, {}});
  }
  if (family_ == Family::kAGL) {
    for (Elem t : basis) {
      gens.push_back({Mat2{}, {t, 0}});
      gens.push_back({Mat2{}, {0, t}});
    }
  }
  for (const auto& [m, z] : gens) {
    const int g = find(m, z);
    if (g > 0 && std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(g);
    }
  }
}

void GroupContext::compute_classes() {
  const int n = order();
  class_of_.assign(n, -1);
  std::vector<int> gen_inv;
  for (int s : generators_) gen_inv.push_back(inverse(s));

  std::vector<std::vector<int>> orbits;
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    const int cls = static_cast<int>(orbits.size());
    std::vector<int> orbit{g};
    class_of_[g] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const int x = orbit[head];
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        const int y = multiply(multiply(generators_[i], x), gen_inv[i]);
        if (class_of_[y] < 0) {
          class_of_[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  const bool linear = family_ == Family::kGL || family_ == Family::kSL;
  member_offsets_.assign(1, 0);
  for (const auto& orbit : orbits) {
    ConjugacyClass c;
    c.representative = orbit.front();
    c.size = static_cast<int>(orbit.size());
    c.fix = fix_[c.representative];
    c.is_derangement = c.fix == 0;
    c.inverse_class = class_of_[inverse(c.representative)];
    if (linear) c.gl_category = classify_matrix(*ext_, mats_[c.representative]);
    classes_.push_back(c);
    members_.insert(members_.end(), orbit.begin(), orbit.end());
    member_offsets_.push_back(static_cast<int>(members_.size()));
  }
}

std::vector<int> GroupContext::derangements() const {
  std::vector<int> out;
  for (int g = 0; g < order(); ++g)
    if (fix_[g] == 0) out.push_back(g);
  return out;
}

int GroupContext::derangement_count() const {
  int n = 0;
  for (const auto& c : classes_)
    if (c.is_derangement) n += c.size;
  return n;
}

int GroupContext::block_image(int g, int block) const {
  if (family_ != Family::kAGL) throw Error(ErrorKind::kInvalidInput, "blocks exist only for AGL");
  return line_direction(image(g, block * q_));
}

int GroupContext::fix_blocks(int g) const {
  int fixed = 0;
  for (int b = 0; b <= q_; ++b) fixed += block_image(g, b) == b;
  return fixed;
}

std::string_view reason_name(AglReason r) {
  switch (r) {
    case AglReason::kNoEigenvalue: return "no-eigenvalue";
    case AglReason::kUnipotentShiftOffAxis: return "unipotent-shift-off-axis";
    case AglReason::kUnipotentShiftOnAxis: return "unipotent-shift-on-axis";
    case AglReason::kSingleEigenvalueNotOne: return "single-eigenvalue-not-one";
    case AglReason::kTwoDistinctEigenvalues: return "two-distinct-eigenvalues";
    case AglReason::kScalar: return "scalar";
  }
  return "?";
}

AglClassification classify_agl_derangement(const GroupContext& agl, int g) {
  if (agl.family() != Family::kAGL) {
    throw Error(ErrorKind::kInvalidInput, "classify_agl_derangement needs an AGL context");
  }
  const auto& f = agl.field();
  const Mat2& m = agl.matrix(g);
  const Vec2 z = agl.shift(g);
  const CategoryTag tag = classify_matrix(agl.extension(), m);
  switch (tag.category) {
    case Category::kC4: return {true, AglReason::kNoEigenvalue};
    case Category::kC3: return {false, AglReason::kTwoDistinctEigenvalues};
    case Category::kC1: return {false, AglReason::kScalar};
    case Category::kC2: break;
  }
  if (tag.x != 1) return {false, AglReason::kSingleEigenvalueNotOne};
  // M - I has rank one; its kernel is the eigenline.
  const Mat2 n{f.sub(m.a, 1), m.b, m.c, f.sub(m.d, 1)};
  const Vec2 s = (n.a != 0 || n.b != 0) ? Vec2{f.neg(n.b), n.a} : Vec2{f.neg(n.d), n.c};
  const bool on_axis = f.sub(f.mul(s.x, z.y), f.mul(s.y, z.x)) == 0;
  if (on_axis) return {false, AglReason::kUnipotentShiftOnAxis};
  return {true, AglReason::kUnipotentShiftOffAxis};
}

BitGraph cayley_graph(const GroupContext& ctx, std::span<const int> connection) {
  const int n = ctx.order();
  BitGraph g(n);
  for (int h = 0; h < n; ++h)
    for (int s : connection) g.add_edge(h, ctx.multiply(h, s));
  return g;
}

BitGraph derangement_graph(const GroupContext& ctx) {
  if (ctx.order() > 50000) {
    throw Error(ErrorKind::kBudget, "derangement graph needs order <= 50000");
  }
  const auto der = ctx.derangements();
  return cayley_graph(ctx, der);
}

bool two_fix_adjacency(const GroupContext& ctx, int g, int h) {
  if (ctx.family() != Family::kPGL && ctx.family() != Family::kPSL) {
    throw Error(ErrorKind::kInvalidInput, "2-intersection adjacency needs PGL or PSL");
  }
  return ctx.fix_count(ctx.multiply(ctx.inverse(h), g)) <= 1;
}

BitGraph two_fix_graph(const GroupContext& ctx) {
  if (ctx.family() != Family::kPGL && ctx.family() != Family::kPSL) {
    throw Error(ErrorKind::kInvalidInput, "2-intersection graph needs PGL or PSL");
  }
  std::vector<int> connection;
  for (int g = 1; g < ctx.order(); ++g)
    if (ctx.fix_count(g) <= 1) connection.push_back(g);
  return cayley_graph(ctx, connection);
}

nlohmann::json inventory_json(const GroupContext& ctx) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < ctx.classes().size(); ++i) {
    const auto& c = ctx.classes()[i];
    nlohmann::json j{{"index", i},
                     {"representative", c.representative},
                     {"size", c.size},
                     {"fix", c.fix},
                     {"derangement", c.is_derangement},
                     {"inverse_class", c.inverse_class}};
    if (c.gl_category) j["category"] = to_string(*c.gl_category);
    classes.push_back(std::move(j));
  }
  return {{"family", family_name(ctx.family())},
          {"q", ctx.q()},
          {"order", ctx.order()},
          {"degree", ctx.degree()},
          {"derangements", ctx.derangement_count()},
          {"classes", std::move(classes)}};
}

}  // namespace ekr::group
