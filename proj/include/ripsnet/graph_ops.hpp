#pragma once

#include <vector>

#include "ripsnet/deploy.hpp"

namespace ripsnet {

/// Hop distances from source within the induced subgraph on `nodes`
/// (all of g when empty). Unreachable entries are -1. Indexed by NodeId.
std::vector<int> bfs_distances(const CommGraph& g, NodeId source,
                               const std::vector<NodeId>& nodes = {});

/// Connected components of the induced subgraph on `nodes` (all of g when
/// empty), each sorted ascending; components ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(
    const CommGraph& g, const std::vector<NodeId>& nodes = {});

/// True when the induced subgraph on `nodes` is connected (and nonempty).
bool is_connected(const CommGraph& g, const std::vector<NodeId>& nodes);

/// Graph induced on `keep` with the original ids preserved; edges touching
/// removed nodes vanish.
CommGraph induced_graph(const CommGraph& g, const std::vector<NodeId>& keep);

/// Lexicographically smallest shortest path from a to b, empty when
/// disconnected. Ties are broken toward smaller node ids at every hop.
std::vector<NodeId> lex_shortest_path(const CommGraph& g, NodeId a, NodeId b);

}  // namespace ripsnet
