#include "ekr/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::chars {
namespace {

using group::Category;
using group::CategoryTag;
using gf::Elem;

// exp(2 pi i n / d) with n reduced first so large exponents stay exact.
Complex root_of_unity(long long n, long long d) {
  n %= d;
  if (n < 0) n += d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(d));
}

}  // namespace

std::string GLCharacter::label() const {
  switch (family) {
    case GLFamily::kRhoPrime: return fmt::format("rho'({})", a);
    case GLFamily::kRhoBar: return fmt::format("rho_bar({})", a);
    case GLFamily::kPi: return fmt::format("pi({})", c);
    case GLFamily::kRho: return fmt::format("rho({},{})", a, b);
  }
  return "?";
}

std::vector<GLCharacter> gl_characters(int q) {
  std::vector<GLCharacter> out;
  const int m = q - 1;
  const int m2 = q * q - 1;
  for (int a = 0; a < m; ++a) out.push_back({GLFamily::kRhoPrime, a, 0, 0, 1});
  for (int a = 0; a < m; ++a) out.push_back({GLFamily::kRhoBar, a, 0, 0, q});
  for (int c = 0; c < m2; ++c) {
    const int cq = static_cast<int>(static_cast<long long>(c) * q % m2);
    if (cq != c && c < cq) out.push_back({GLFamily::kPi, 0, 0, c, q - 1});
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) out.push_back({GLFamily::kRho, a, b, 0, q + 1});
  return out;
}

Complex gl_char_value(const gf::QuadraticExtension& ext, const GLCharacter& chi,
                      const CategoryTag& cls) {
  const auto& f = ext.base();
  const auto& e = ext.ext();
  const long long m = f.order() - 1;
  const long long m2 = static_cast<long long>(e.order()) - 1;
  const long long qd = f.order();
  auto alpha = [&](long long exponent, Elem x) { return root_of_unity(exponent * f.log(x), m); };
  auto big = [&](Elem z) { return root_of_unity(static_cast<long long>(chi.c) * e.log(z), m2); };

  switch (cls.category) {
    case Category::kC1:
    case Category::kC2: {
      const Elem x = cls.x;
      const bool scalar = cls.category == Category::kC1;
      switch (chi.family) {
        case GLFamily::kRhoPrime: return alpha(2LL * chi.a, x);
        case GLFamily::kRhoBar: return scalar ? static_cast<double>(qd) * alpha(2LL * chi.a, x) : 0.0;
        case GLFamily::kPi: {
          const Complex v = big(ext.embed(x));
          return scalar ? static_cast<double>(qd - 1) * v : -v;
        }
        case GLFamily::kRho: {
          const Complex v = alpha(chi.a, x) * alpha(chi.b, x);
          return scalar ? static_cast<double>(qd + 1) * v : v;
        }
      }
      break;
    }
    case Category::kC3: {
      const Elem x = cls.x;
      const Elem y = cls.y;
      switch (chi.family) {
        case GLFamily::kRhoPrime:
        case GLFamily::kRhoBar: return alpha(chi.a, f.mul(x, y));
        case GLFamily::kPi: return 0.0;
        case GLFamily::kRho: return alpha(chi.a, x) * alpha(chi.b, y) + alpha(chi.a, y) * alpha(chi.b, x);
      }
      break;
    }
    case Category::kC4: {
      const Elem z = cls.z;
      switch (chi.family) {
        case GLFamily::kRhoPrime: return alpha(chi.a, ext.norm(z));
        case GLFamily::kRhoBar: return -alpha(chi.a, ext.norm(z));
        case GLFamily::kPi: return -(big(z) + big(ext.conj(z)));
        case GLFamily::kRho: return 0.0;
      }
      break;
    }
  }
  return 0.0;
}

CharacterTable gl_character_table(const group::GroupContext& gl) {
  if (gl.family() != group::Family::kGL) {
    throw Error(ErrorKind::kInvalidInput, "explicit character table exists for GL only");
  }
  CharacterTable t;
  for (const auto& chi : gl_characters(gl.q())) {
    CharacterRow row{chi.label(), chi.degree, {}};
    for (const auto& c : gl.classes()) row.values.push_back(gl_char_value(gl.extension(), chi, *c.gl_category));
    t.rows.push_back(std::move(row));
  }
  return t;
}

int gl_permutation_character(const gf::QuadraticExtension& ext, const CategoryTag& cls,
                             int expected_fix) {
  const int q = ext.base().order();
  Complex sum = 1.0;
  sum += gl_char_value(ext, {GLFamily::kRhoBar, 0, 0, 0, q}, cls);
  for (int b = 1; b < q - 1; ++b) sum += gl_char_value(ext, {GLFamily::kRho, 0, b, 0, q + 1}, cls);
  const long long rounded = std::llround(sum.real());
  if (std::abs(sum - Complex(static_cast<double>(rounded), 0.0)) > 1e-6) {
    throw Error(ErrorKind::kNumeric, "permutation character is not integral on " + group::to_string(cls));
  }
  if (expected_fix >= 0 && rounded != expected_fix) {
    throw Error(ErrorKind::kVerification,
                fmt::format("permutation character {} != fix count {} on {}", rounded, expected_fix,
                            group::to_string(cls)));
  }
  return static_cast<int>(rounded);
}

StructureConstants StructureConstants::compute(const group::GroupContext& ctx) {
  const int n = static_cast<int>(ctx.classes().size());
  if (n > kMaxClasses) {
    throw Error(ErrorKind::kBudget, fmt::format("{} classes exceed the class-algebra budget of {}", n,
                                                kMaxClasses));
  }
  StructureConstants sc;
  sc.n_ = n;
  sc.order_ = ctx.order();
  sc.identity_class_ = ctx.class_of(ctx.identity());
  for (const auto& c : ctx.classes()) sc.sizes_.push_back(c.size);
  sc.a_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int k = 0; k < n; ++k) {
    const int z = ctx.classes()[k].representative;
    for (int x = 0; x < ctx.order(); ++x) {
      const int i = ctx.class_of(x);
      const int j = ctx.class_of(ctx.multiply(ctx.inverse(x), z));
      ++sc.a_[(static_cast<std::size_t>(i) * n + j) * n + k];
    }
  }
  return sc;
}

CentralCharacterTable central_characters(const StructureConstants& sc, std::uint64_t seed) {
  const int n = sc.class_count();
  const auto& sizes = sc.sizes();
  const int id = sc.identity_class();

  // M_i scaled by 1/|C_i| so every eigenvalue chi_i/chi(1) has modulus <= 1.
  std::vector<Eigen::MatrixXd> mats(n, Eigen::MatrixXd(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) mats[i](j, k) = static_cast<double>(sc(i, j, k)) / sizes[i];

  constexpr int kMaxReseeds = 5;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);

  for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) combo += coef(rng) * mats[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXcd lambda = es.eigenvalues();

    double gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) gap = std::min(gap, std::abs(lambda(a) - lambda(b)));
    if (n > 1 && gap < 1e-7) continue;

    CentralCharacterTable out;
    out.reseeds = attempt;
    const Eigen::MatrixXcd vecs = es.eigenvectors();
    const Eigen::MatrixXcd combo_c = combo.cast<Complex>();
    for (int m = 0; m < n; ++m) {
      Eigen::VectorXcd v = vecs.col(m);
      if (std::abs(v(id)) < 1e-12) {
        throw Error(ErrorKind::kNumeric, "central character vanishes on the identity class");
      }
      v /= v(id);
      // One step of inverse iteration tightens the eigenvector.
      const Complex shift = lambda(m) + Complex(1e-10, 1e-10);
      Eigen::MatrixXcd shifted = combo_c - shift * Eigen::MatrixXcd::Identity(n, n);
      Eigen::VectorXcd w = shifted.partialPivLu().solve(v);
      if (w.allFinite() && std::abs(w(id)) > 0) v = w / w(id);

      // Row `id` of M_i is e_i, so with v(id) = 1 the vector v is omega
      // itself and M_i acts on it by v(i).
      std::vector<Complex> omega(n);
      for (int k = 0; k < n; ++k) omega[k] = v(k);
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        const Eigen::VectorXcd r = mats[i].cast<Complex>() * v - v(i) * v / static_cast<double>(sizes[i]);
        worst = std::max(worst, r.cwiseAbs().maxCoeff() / std::max(1.0, v.cwiseAbs().maxCoeff()));
      }
      out.max_residual = std::max(out.max_residual, worst);

      double s = 0.0;
      for (int k = 0; k < n; ++k) s += std::norm(omega[k]) / sizes[k];
      const double d = std::sqrt(static_cast<double>(sc.group_order()) / s);
      const long long rd = std::llround(d);
      if (rd < 1 || std::abs(d - static_cast<double>(rd)) > 1e-6) {
        throw Error(ErrorKind::kNumeric, fmt::format("recovered degree {} is not integral", d));
      }
      out.omega.push_back(std::move(omega));
      out.degrees.push_back(static_cast<int>(rd));
    }
    if (out.max_residual > 1e-8) {
      throw Error(ErrorKind::kNumeric,
                  fmt::format("central character residual {:.3g} exceeds 1e-8", out.max_residual));
    }
    long long sum_sq = 0;
    for (int d : out.degrees) sum_sq += static_cast<long long>(d) * d;
    if (sum_sq != sc.group_order()) {
      throw Error(ErrorKind::kNumeric,
                  fmt::format("sum of squared degrees {} != |G| = {}", sum_sq, sc.group_order()));
    }
    return out;
  }
  throw Error(ErrorKind::kNumeric, "eigenvalue collision survived five reseeds (degenerate split)");
}

CharacterTable character_table_from_central(const CentralCharacterTable& cc,
                                            const std::vector<int>& class_sizes) {
  struct Entry {
    int degree;
    bool trivial;
    std::vector<long long> key;
    CharacterRow row;
  };
  std::vector<Entry> entries;
  const int n = static_cast<int>(class_sizes.size());
  for (std::size_t m = 0; m < cc.omega.size(); ++m) {
    Entry e{cc.degrees[m], true, {}, {}};
    e.row.degree = cc.degrees[m];
    for (int k = 0; k < n; ++k) {
      const Complex v = cc.omega[m][k] * static_cast<double>(cc.degrees[m]) / static_cast<double>(class_sizes[k]);
      e.row.values.push_back(v);
      e.key.push_back(-std::llround(v.real() * 1e6));
      e.key.push_back(-std::llround(v.imag() * 1e6));
      if (std::abs(v - Complex(1.0, 0.0)) > 1e-6) e.trivial = false;
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.trivial != y.trivial) return x.trivial;
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.key < y.key;
  });
  CharacterTable t;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].row.label = fmt::format("chi{}", i);
    t.rows.push_back(std::move(entries[i].row));
  }
  return t;
}

CharacterTable character_table(const group::GroupContext& ctx, std::uint64_t seed) {
  if (ctx.family() == group::Family::kGL) return gl_character_table(ctx);
  const auto sc = StructureConstants::compute(ctx);
  return character_table_from_central(central_characters(sc, seed), sc.sizes());
}

SLCategoryTable sl_category_sums(int q) {
  using R = Rational;
  const long long Q = q;
  SLCategoryTable t;
  auto row = [&](std::string label, long long degree, long long count, R s1, R s2, R s3, R s4,
                 R printed) {
    t.rows.push_back({std::move(label), degree, count, {s1, s2, s3, s4}, printed});
  };
  if (q % 2 == 0) {
    t.name = "sl-even-category-sums";
    row("rho'(1)", 1, 1, 0, 0, R(Q - 2, 2), R(Q, 2), R(Q * Q - 2));
    row("pi(chi)", Q - 1, Q / 2, 0, 0, 0, 1, R(Q + 2, Q));
    row("rho_bar(1)", Q, 1, 0, 0, R(Q - 2, 2), R(-Q, 2), R(-1));
    row("rho(alpha)", Q + 1, (Q - 2) / 2, 0, 0, -1, 0, R(-1));
    return t;
  }
  const R half_m3(Q - 3, 2);
  const R half_m1(Q - 1, 2);
  const R half_p1(Q + 1, 2);
  if (q % 4 == 1) {
    t.name = "sl-odd-1mod4-category-sums";
    row("rho'(1)", 1, 1, 1, 2, half_m3, half_m1, R(Q * Q - 2));
    row("rho_bar(1)", Q, 1, Q, 0, half_m3, -half_m1, R(-1));
    row("rho(alpha), alpha(-1)=-1", Q + 1, (Q - 1) / 4, -(Q + 1), -2, 0, 0, R(-1));
    row("rho(alpha), else", Q + 1, (Q - 5) / 4, Q + 1, 2, -2, 0, R(-1));
    row("pi(chi), chi(-1)=-1", Q - 1, (Q - 1) / 4, -(Q - 1), 2, 0, 0, R(Q + 1, Q - 1));
    row("pi(chi), chi(-1)=1", Q - 1, (Q - 1) / 4, Q - 1, -2, 0, 2, R(2 * (Q * Q - 5), (Q - 1) * (Q - 1)));
    row("w_e+-", (Q + 1) / 2, 2, half_p1, 1, -1, 0, R(-1));
    row("w_0+-", (Q - 1) / 2, 2, -half_m1, 1, 0, 0, R(Q + 1, Q - 1));
  } else {
    t.name = "sl-odd-3mod4-category-sums";
    row("rho'(1)", 1, 1, 1, 2, half_m3, half_m1, R(Q * Q - 2));
    row("rho_bar(1)", Q, 1, Q, 0, half_m3, -half_m1, R(-1));
    row("rho(alpha), alpha(-1)=-1", Q + 1, (Q - 3) / 4, -(Q + 1), -2, 0, 0, R(-1));
    row("rho(alpha), else", Q + 1, (Q - 3) / 4, Q + 1, 2, -2, 0, R(-1));
    row("pi(chi), first", Q - 1, (Q + 1) / 4, -(Q - 1), 2, 0, 0, R(Q + 1, Q - 1));
    row("pi(chi), second", Q - 1, (Q - 3) / 4, Q - 1, -2, 0, 2, R(2 * (Q * Q - 5), (Q - 1) * (Q - 1)));
    row("w_e+-", (Q + 1) / 2, 2, -half_p1, -1, 0, 0, R(-1));
    row("w_0+-", (Q - 1) / 2, 2, half_m1, -1, 0, 1, R(Q * Q - 5, 4));
  }
  return t;
}

nlohmann::json to_json(const CharacterTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : r.values) vals.push_back({v.real(), v.imag()});
    rows.push_back({{"label", r.label}, {"degree", r.degree}, {"values", std::move(vals)}});
  }
  return {{"characters", std::move(rows)}};
}

}  // namespace ekr::chars
