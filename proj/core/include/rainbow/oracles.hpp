#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

/// Matching number by exhaustive branch-and-bound. Branches on the least
/// undecided vertex of side 0 (either matched by one of its free incident
/// edges or left unmatched) and prunes with the per-side free-vertex quota.
/// Requires at most 64 vertices.
std::size_t nu_exact(const Hypergraph& h);

/// nu_exact(h) >= k, stopping as soon as a k-matching is found.
bool has_matching_of_size(const Hypergraph& h, std::size_t k);

/// Exhaustive backtracking for a rainbow matching. Members are visited in
/// ascending size order (ties by index), edges in lexicographic order; the
/// first matching found is returned in original member order.
std::optional<RainbowMatching> rainbow_exact(const Family& family);

/// The cyclic decomposition of [n]^r into n^(r-1) perfect matchings. The
/// matching for offsets (c_2, ..., c_r), taken in lexicographic order, holds
/// the edges (i, i+c_2, ..., i+c_r) mod n.
std::vector<std::vector<Edge>> pm_decomposition(int n, int r);

}  // namespace rainbow
