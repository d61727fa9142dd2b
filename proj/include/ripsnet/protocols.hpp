#pragma once

#include <limits>

#include "ripsnet/engine.hpp"
#include "ripsnet/rips.hpp"
#include "ripsnet/types.hpp"

namespace ripsnet {

struct EccentricityResult {
    std::map<NodeId, int> f;  // hop eccentricity within the partition
    RoundTrace trace;
};

/**
 * Distributed eccentricity: every node floods its id, rebroadcasts each id
 * it discovers exactly once, and stops after its first round without a new
 * discovery; f is the round of the last discovery. Discovery tables evict
 * entries after `retention` rounds (2 suffices to suppress duplicates; the
 * unbounded mode exists for the equivalence test).
 *
 * Throws when the partition is not connected.
 */
EccentricityResult run_eccentricity(const CommGraph& g,
                                    const std::vector<NodeId>& nodes,
                                    int retention = 2);

struct ConsensusResult {
    std::map<NodeId, double> value;   // converged maximum
    std::map<NodeId, NodeId> witness; // smallest id holding it
    RoundTrace trace;
};

/**
 * Gossip max-consensus: a node broadcasts whenever it learns a strictly
 * better (value, witness) pair; ties prefer the smaller witness id. All
 * nodes hold the global maximum after at most diameter rounds.
 */
ConsensusResult max_consensus(const CommGraph& g,
                              const std::vector<NodeId>& nodes,
                              const std::map<NodeId, double>& init);

struct FloodResult {
    // received[v] maps each source id heard by v to its arrival round.
    std::map<NodeId, std::map<NodeId, int>> received;
    std::map<NodeId, int> first_arrival;
    RoundTrace trace;
};

/// BFS wavefronts from every source at once; each node rebroadcasts each
/// distinct source id exactly once. Arrival rounds equal hop distances.
FloodResult flood_from(const CommGraph& g, const std::vector<NodeId>& nodes,
                       const std::vector<NodeId>& sources);

struct DistributedPIResult {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    RoundTrace trace;
};

/**
 * Power iteration executed as a message-passing protocol: each edge
 * coordinate is owned by its smaller endpoint, owners broadcast their
 * values, neighbors relay them once (two hops cover every Laplacian
 * coupling), and normalization sums travel over an exact spanning-tree
 * convergecast. Matches the centralized iteration numerically.
 */
DistributedPIResult distributed_power_iteration(
    const CommGraph& g, const std::vector<NodeId>& nodes,
    const RipsComplex& x, const spmat_t& L, std::uint64_t seed = 12345,
    int max_iters = 0, double rel_change = 1e-10,
    double stop_above = std::numeric_limits<double>::infinity());

constexpr int kUnboundedRetention = std::numeric_limits<int>::max();

}  // namespace ripsnet
