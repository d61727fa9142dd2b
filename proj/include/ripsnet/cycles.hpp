#pragma once

#include <vector>

#include "ripsnet/deploy.hpp"
#include "ripsnet/types.hpp"

namespace ripsnet {

/**
 * Shortest non-contractible cycle of the Rips complex induced on `nodes`
 * (whole graph when empty), as an ordered closed node sequence. Candidates
 * are BFS-tree cycles from every root (trimmed at the deepest common
 * ancestor, so they are simple), deduplicated, scanned shortest first and
 * lexicographically within a length, and each one is verified against the
 * exact homology oracle until a non-bounding cycle appears. Empty result
 * means the complex has trivial first homology.
 */
std::vector<NodeId> shortest_noncontractible_cycle(
    const CommGraph& g, const std::vector<NodeId>& nodes = {});

/// Canonical rotation/reflection of a closed node sequence, for dedupe and
/// stable output: starts at the smallest node, walks toward its smaller
/// neighbor.
std::vector<NodeId> canonical_cycle(const std::vector<NodeId>& cycle);

}  // namespace ripsnet
