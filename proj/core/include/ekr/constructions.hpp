#pragma once

// Explicit cliques, cocliques and 2-intersecting sets. Every builder returns
// a Certificate and leaves checking to cert::verify.

#include <vector>

#include "ekr/certificate.hpp"
#include "ekr/group.hpp"

namespace ekr::constructions {

/// Companion matrix [[0, -N], [1, Tr]] of the primitive element of GF(q^2)
/// and its cyclic group. GL only.
group::Mat2 singer_generator(const group::GroupContext& gl);
cert::Certificate singer_clique(const group::GroupContext& gl);

/// {M : (M - I) v in span(u) for all v}, u the vector of projective index
/// `line`. Index q is span(0,1), whose members have a = 1 and b = 0. GL only.
cert::Certificate line_stabilizer_coclique(const group::GroupContext& gl, int line);

/// True when some canonical set S_{i,j} = {g : g(i) = j} equals `ids`.
bool equals_canonical_set(const group::GroupContext& ctx, const std::vector<int>& ids);

/// Cyclic group of the first element (by id) that permutes the blocks in a
/// (q+1)-cycle and has order q+1. AGL only.
cert::Certificate agl_cycle_clique(const group::GroupContext& agl);

/// The block kernel {(cI, z)} of size q^2 (q-1). AGL only.
cert::Certificate block_stabilizer(const group::GroupContext& agl);

/// identity, x, h x h^-1, h^-1 x h for x = diag(1, a) over the Type-1
/// classes, and diag(1, -1) for q odd. h = [[1,-1],[1,0]] maps
/// 0 -> inf -> 1 -> 0 with 0 = (0:1), inf = (1:0), 1 = (1:1). PGL only.
cert::Certificate pgl_two_intersecting(const group::GroupContext& pgl);

/// Union of the cosets (M_s, 0) * {(cI, z)} over s in S.
cert::Certificate agl_lift(const group::GroupContext& agl, const group::GroupContext& pgl,
                           const cert::Certificate& s);

/// Setwise stabilizer in PSL(2,q) of {0, inf}; needs q = 1 mod 4.
cert::Certificate psl_setwise_stabilizer(const group::GroupContext& psl);

/// Element ids of the subgroup generated by `gens`.
std::vector<int> generated_subgroup(const group::GroupContext& ctx, const std::vector<int>& gens);

/// Sizes |S cap gH| over the left cosets gH that meet S, descending.
std::vector<int> left_coset_profile(const group::GroupContext& ctx, const std::vector<int>& set,
                                    const std::vector<int>& subgroup);

/// The translation subgroup {(I, z)}. AGL only.
std::vector<int> translation_subgroup(const group::GroupContext& agl);

}  // namespace ekr::constructions
