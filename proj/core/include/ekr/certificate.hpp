#pragma once

// Serialized vertex sets with a claimed pairwise property. Verification
// rebuilds the group from (family, q) and compares action images point by
// point; it never consults the code that produced the set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ekr/group.hpp"

namespace ekr::cert {

enum class Kind { kClique, kCoclique, kTwoIntersecting, kIntersectingLift };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view s);

struct Certificate {
  group::Family family = group::Family::kGL;
  int q = 0;
  Kind kind = Kind::kCoclique;
  std::vector<int> ids;
  std::string notes;

  std::size_t size() const { return ids.size(); }
};

/// {family, q, kind, ids, size, notes}
nlohmann::json to_json(const Certificate& c);
/// Throws kInvalidInput on a missing field or when size != ids.size().
Certificate from_json(const nlohmann::json& j);

Certificate load(const std::string& path);
void save(const Certificate& c, const std::string& path);

inline constexpr std::uint64_t kSampleSeed = 0x00c0ffee5eedULL;

struct VerifyOptions {
  long long exhaustive_pair_budget = 10'000'000;  // |S|^2 at or below this: every pair
  long long sampled_pairs = 100'000;
  std::uint64_t seed = kSampleSeed;
};

struct VerifyReport {
  bool ok = false;
  bool exhaustive = false;
  long long pairs_checked = 0;
  std::string failure;  // empty when ok
};

/// Number of domain points on which g and h agree, from the image tables.
int agreement(const group::GroupContext& ctx, int g, int h);

/// Checks the claimed property against a freshly built group.
VerifyReport verify(const Certificate& c, const VerifyOptions& options = {});
/// Same check against a context the caller already built for (family, q).
VerifyReport verify(const Certificate& c, const group::GroupContext& ctx, const VerifyOptions& options = {});

/// Left translate t * S.
Certificate translate(const Certificate& c, const group::GroupContext& ctx, int t);

}  // namespace ekr::cert
