#include "ekr/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::constructions {
namespace {

using group::Family;
using group::Mat2;
using group::Vec2;

void require(const group::GroupContext& ctx, Family f, const char* what) {
  if (ctx.family() != f) {
    throw Error(ErrorKind::kInvalidInput, fmt::format("{} needs a {} context", what, group::family_name(f)));
  }
}

int element_order(const group::GroupContext& ctx, int g) {
  int n = 1;
  for (int x = g; x != ctx.identity(); x = ctx.multiply(x, g)) ++n;
  return n;
}

std::vector<int> cyclic(const group::GroupContext& ctx, int g) {
  std::vector<int> out{ctx.identity()};
  for (int x = g; x != ctx.identity(); x = ctx.multiply(x, g)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<int> generated_subgroup(const group::GroupContext& ctx, const std::vector<int>& gens) {
  std::vector<char> in(ctx.order(), 0);
  std::vector<int> out{ctx.identity()};
  in[ctx.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s : gens) {
      const int y = ctx.multiply(out[head], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mat2 singer_generator(const group::GroupContext& gl) {
  require(gl, Family::kGL, "singer_generator");
  const auto& ext = gl.extension();
  const auto& f = gl.field();
  const gf::Elem omega = ext.ext().primitive();
  return {0, f.neg(ext.norm(omega)), 1, ext.trace(omega)};
}

cert::Certificate singer_clique(const group::GroupContext& gl) {
  const int g = gl.find(singer_generator(gl));
  cert::Certificate c{Family::kGL, gl.q(), cert::Kind::kClique, cyclic(gl, g),
                      "cyclic group of the companion matrix of the primitive element of GF(q^2)"};
  std::sort(c.ids.begin(), c.ids.end());
  return c;
}

cert::Certificate line_stabilizer_coclique(const group::GroupContext& gl, int line) {
  require(gl, Family::kGL, "line_stabilizer_coclique");
  const auto& f = gl.field();
  if (line < 0 || line > gl.q()) throw Error(ErrorKind::kInvalidInput, "line index must be in [0, q]");
  const Vec2 u = gl.projective_vector(line);
  auto on_line = [&](Vec2 v) { return f.sub(f.mul(u.x, v.y), f.mul(u.y, v.x)) == 0; };
  cert::Certificate c{Family::kGL, gl.q(), cert::Kind::kCoclique, {},
                      fmt::format("stabilizer of the line of projective index {}: (M - I)v on the line", line)};
  for (int g = 0; g < gl.order(); ++g) {
    const Mat2& m = gl.matrix(g);
    const Vec2 col1{f.sub(m.a, 1), m.c};
    const Vec2 col2{m.b, f.sub(m.d, 1)};
    if (on_line(col1) && on_line(col2)) c.ids.push_back(g);
  }
  return c;
}

bool equals_canonical_set(const group::GroupContext& ctx, const std::vector<int>& ids) {
  if (ids.empty()) return false;
  const int first = ids.front();
  for (int i = 0; i < ctx.degree(); ++i) {
    const int j = ctx.image(first, i);
    bool all = std::all_of(ids.begin(), ids.end(), [&](int g) { return ctx.image(g, i) == j; });
    if (all && static_cast<long long>(ids.size()) * ctx.degree() == ctx.order()) return true;
  }
  return false;
}

cert::Certificate agl_cycle_clique(const group::GroupContext& agl) {
  require(agl, Family::kAGL, "agl_cycle_clique");
  const int q = agl.q();
  auto block_cycle = [&](int g) {
    int b = 0;
    int len = 0;
    do {
      b = agl.block_image(g, b);
      ++len;
    } while (b != 0 && len <= q + 1);
    return len == q + 1;
  };
  // g^1..g^q move every block, so they fix no line and {g^0..g^q} is a
  // clique. It is a subgroup only when g has order q+1, which needs q even.
  int first = -1;
  for (int g = 1; g < agl.order(); ++g) {
    if (agl.fix_count(g) != 0 || !block_cycle(g)) continue;
    if (first < 0) first = g;
    if (element_order(agl, g) == q + 1) {
      cert::Certificate c{Family::kAGL, q, cert::Kind::kClique, cyclic(agl, g),
                          fmt::format("cyclic group of element {} acting on the blocks as a (q+1)-cycle", g)};
      std::sort(c.ids.begin(), c.ids.end());
      return c;
    }
  }
  if (first < 0) throw Error(ErrorKind::kVerification, "no element permutes the blocks in a (q+1)-cycle");
  cert::Certificate c{Family::kAGL, q, cert::Kind::kClique, {},
                      fmt::format("powers 0..q of element {} acting on the blocks as a (q+1)-cycle", first)};
  for (int k = 0, x = agl.identity(); k <= q; ++k, x = agl.multiply(x, first)) c.ids.push_back(x);
  std::sort(c.ids.begin(), c.ids.end());
  return c;
}

cert::Certificate block_stabilizer(const group::GroupContext& agl) {
  require(agl, Family::kAGL, "block_stabilizer");
  cert::Certificate c{Family::kAGL, agl.q(), cert::Kind::kCoclique, {}, "block kernel {(cI, z)}"};
  for (int g = 0; g < agl.order(); ++g) {
    const Mat2& m = agl.matrix(g);
    if (m.b == 0 && m.c == 0 && m.a == m.d) c.ids.push_back(g);
  }
  return c;
}

std::vector<int> translation_subgroup(const group::GroupContext& agl) {
  require(agl, Family::kAGL, "translation_subgroup");
  std::vector<int> out;
  for (int g = 0; g < agl.order(); ++g)
    if (agl.matrix(g) == Mat2{}) out.push_back(g);
  return out;
}

cert::Certificate pgl_two_intersecting(const group::GroupContext& pgl) {
  require(pgl, Family::kPGL, "pgl_two_intersecting");
  const int q = pgl.q();
  if (q < 3) throw Error(ErrorKind::kInvalidInput, "pgl_two_intersecting needs q >= 3");
  const auto& f = pgl.field();
  const int h = pgl.find(Mat2{1, f.neg(1), 1, 0});
  const int hi = pgl.inverse(h);
  std::vector<int> ids{pgl.identity()};
  std::set<gf::Elem> used;
  std::vector<gf::Elem> type1;
  // Type 1: diag(1,a) with a outside {0, 1, -1}; a and 1/a are conjugate.
  for (int e = 1; e < q - 1; ++e) {
    const gf::Elem a = f.exp(e);
    if (a == f.neg(1) || used.count(a)) continue;
    used.insert(a);
    used.insert(f.inv(a));
    type1.push_back(a);
  }
  for (gf::Elem a : type1) {
    const int x = pgl.find(Mat2{1, 0, 0, a});
    ids.push_back(x);
    ids.push_back(pgl.multiply(pgl.multiply(h, x), hi));
    ids.push_back(pgl.multiply(pgl.multiply(hi, x), h));
  }
  if (q % 2 == 1) ids.push_back(pgl.find(Mat2{1, 0, 0, f.neg(1)}));
  std::string type1_list;
  for (gf::Elem a : type1) type1_list += fmt::format(" {}", a);
  return {Family::kPGL, q, cert::Kind::kTwoIntersecting, ids,
          fmt::format("points 1,2,3 -> 0=(0:1), inf=(1:0), 1=(1:1); h=[[1,-1],[1,0]]; Type-1 a:{}{}", type1_list,
                      q % 2 ? "; Type-2 diag(1,-1)" : "")};
}

cert::Certificate agl_lift(const group::GroupContext& agl, const group::GroupContext& pgl,
                           const cert::Certificate& s) {
  require(agl, Family::kAGL, "agl_lift");
  require(pgl, Family::kPGL, "agl_lift");
  if (agl.q() != pgl.q() || s.q != pgl.q() || s.family != Family::kPGL) {
    throw Error(ErrorKind::kInvalidInput, "agl_lift needs a PGL(2,q) set and matching contexts");
  }
  const auto& f = agl.field();
  const int q = agl.q();
  cert::Certificate c{Family::kAGL, q, cert::Kind::kIntersectingLift, {},
                      fmt::format("union of {} cosets (M_s,0)*{{(cI,z)}} over a PGL 2-intersecting set", s.size())};
  for (int sid : s.ids) {
    const Mat2& m = pgl.matrix(sid);
    for (gf::Elem cs = 1; cs < q; ++cs) {
      const Mat2 cm = group::mat_scale(f, cs, m);
      for (gf::Elem x = 0; x < q; ++x)
        for (gf::Elem y = 0; y < q; ++y) c.ids.push_back(agl.find(cm, {x, y}));
    }
  }
  std::sort(c.ids.begin(), c.ids.end());
  return c;
}

cert::Certificate psl_setwise_stabilizer(const group::GroupContext& psl) {
  require(psl, Family::kPSL, "psl_setwise_stabilizer");
  const int q = psl.q();
  if (q % 4 != 1) throw Error(ErrorKind::kDomain, "setwise stabilizer construction needs q = 1 mod 4");
  const int zero = q;  // (0:1)
  const int inf = 0;   // (1:0)
  cert::Certificate c{Family::kPSL, q, cert::Kind::kTwoIntersecting, {}, "setwise stabilizer of {0, inf}"};
  for (int g = 0; g < psl.order(); ++g) {
    const int a = psl.image(g, zero);
    const int b = psl.image(g, inf);
    if ((a == zero && b == inf) || (a == inf && b == zero)) c.ids.push_back(g);
  }
  return c;
}

std::vector<int> left_coset_profile(const group::GroupContext& ctx, const std::vector<int>& set,
                                    const std::vector<int>& subgroup) {
  // gH = g'H iff g^-1 g' in H; label each coset by its smallest element.
  std::map<int, int> counts;
  for (int g : set) {
    int label = g;
    for (int h : subgroup) label = std::min(label, ctx.multiply(g, h));
    ++counts[label];
  }
  std::vector<int> out;
  for (const auto& [label, n] : counts) out.push_back(n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace ekr::constructions
