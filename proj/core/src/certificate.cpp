#include "ekr/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <fmt/format.h>

#include "ekr/error.hpp"

namespace ekr::cert {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::kClique: return "clique";
    case Kind::kCoclique: return "coclique";
    case Kind::kTwoIntersecting: return "2-intersecting";
    case Kind::kIntersectingLift: return "intersecting-lift";
  }
  return "?";
}

Kind parse_kind(std::string_view s) {
  if (s == "clique") return Kind::kClique;
  if (s == "coclique") return Kind::kCoclique;
  if (s == "2-intersecting") return Kind::kTwoIntersecting;
  if (s == "intersecting-lift") return Kind::kIntersectingLift;
  throw Error(ErrorKind::kInvalidInput, fmt::format("unknown certificate kind '{}'", s));
}

nlohmann::json to_json(const Certificate& c) {
  return {{"family", group::family_name(c.family)},
          {"q", c.q},
          {"kind", kind_name(c.kind)},
          {"ids", c.ids},
          {"size", c.ids.size()},
          {"notes", c.notes}};
}

Certificate from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.family = group::parse_family(j.at("family").get<std::string>());
    c.q = j.at("q").get<int>();
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.ids = j.at("ids").get<std::vector<int>>();
    c.notes = j.value("notes", "");
    const auto size = j.at("size").get<long long>();
    if (size != static_cast<long long>(c.ids.size())) {
      throw Error(ErrorKind::kInvalidInput,
                  fmt::format("certificate claims size {} but lists {} ids", size, c.ids.size()));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("malformed certificate: ") + e.what());
  }
}

Certificate load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, path + ": " + e.what());
  }
  return from_json(j);
}

void save(const Certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + path);
  out << to_json(c).dump(2) << "\n";
}

int agreement(const group::GroupContext& ctx, int g, int h) {
  const auto a = ctx.images(g);
  const auto b = ctx.images(h);
  int n = 0;
  for (std::size_t x = 0; x < a.size(); ++x) n += a[x] == b[x];
  return n;
}

namespace {

// Empty string when the pair satisfies the claim.
std::string pair_failure(const Certificate& c, const group::GroupContext& ctx, int g, int h) {
  const int agree = agreement(ctx, g, h);
  switch (c.kind) {
    case Kind::kClique:
      if (agree != 0) return fmt::format("ids {} and {} agree on {} points", g, h, agree);
      break;
    case Kind::kCoclique:
    case Kind::kIntersectingLift:
      if (agree == 0) return fmt::format("ids {} and {} do not intersect", g, h);
      break;
    case Kind::kTwoIntersecting:
      if (agree < 2) return fmt::format("ids {} and {} agree on only {} points", g, h, agree);
      break;
  }
  return {};
}

}  // namespace

VerifyReport verify(const Certificate& c, const VerifyOptions& options) {
  const auto ctx = group::GroupContext::build(c.family, c.q);
  return verify(c, ctx, options);
}

VerifyReport verify(const Certificate& c, const group::GroupContext& ctx, const VerifyOptions& options) {
  VerifyReport rep;
  if (ctx.family() != c.family || ctx.q() != c.q) {
    rep.failure = "context does not match the certificate's group";
    return rep;
  }
  if (c.kind == Kind::kTwoIntersecting && c.family != group::Family::kPGL && c.family != group::Family::kPSL) {
    rep.failure = "2-intersecting certificates need PGL or PSL";
    return rep;
  }
  std::vector<int> sorted = c.ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    rep.failure = "duplicate ids";
    return rep;
  }
  for (int g : c.ids) {
    if (g < 0 || g >= ctx.order()) {
      rep.failure = fmt::format("id {} out of range", g);
      return rep;
    }
  }

  const long long n = static_cast<long long>(c.ids.size());
  rep.exhaustive = n * n <= options.exhaustive_pair_budget;
  if (rep.exhaustive) {
    for (long long i = 0; i < n; ++i)
      for (long long j = i + 1; j < n; ++j) {
        ++rep.pairs_checked;
        auto f = pair_failure(c, ctx, c.ids[i], c.ids[j]);
        if (!f.empty()) {
          rep.failure = std::move(f);
          return rep;
        }
      }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long long> pick(0, n - 1);
    while (rep.pairs_checked < options.sampled_pairs) {
      const long long i = pick(rng);
      const long long j = pick(rng);
      if (i == j) continue;
      ++rep.pairs_checked;
      auto f = pair_failure(c, ctx, c.ids[i], c.ids[j]);
      if (!f.empty()) {
        rep.failure = std::move(f);
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

Certificate translate(const Certificate& c, const group::GroupContext& ctx, int t) {
  Certificate out = c;
  for (int& g : out.ids) g = ctx.multiply(t, g);
  out.notes = c.notes.empty() ? fmt::format("left translate by {}", t)
                              : fmt::format("{}; left translate by {}", c.notes, t);
  return out;
}

}  // namespace ekr::cert
