#pragma once

#include <string>

#include "ripsnet/cycles.hpp"
#include "ripsnet/homology.hpp"
#include "ripsnet/protocols.hpp"

namespace ripsnet {

struct DiameterPair {
    NodeId u = -1;
    NodeId v = -1;
    int eccentricity = 0;  // f at the elected endpoints

    bool degenerate() const { return u == v; }
};

struct LocatorParams {
    double tol = 1e-6;        // rank-deficiency tolerance
    int max_iters = 0;        // power-iteration cap, 0 = 10 * |E|
    // Optional early stop: partitions no larger than this are declared
    // survivors once within three girths of their hole cycle. Off by
    // default; the no-shrink and boundary-covers-all rules already halt,
    // and letting the splits run pulls survivors tight onto the rims.
    int girth_cap = 0;
    int max_generations = 64;
    std::uint64_t seed = 12345;
};

/**
 * Diameter-node election: eccentricities by flooding, a max-consensus on f,
 * a min-id consensus among the candidates, then a flood from the winner and
 * a final consensus electing the smallest id at the far end.
 */
struct DiameterElection {
    DiameterPair pair;
    std::map<NodeId, int> f;
    RoundTrace f_trace;      // eccentricity phase
    RoundTrace max_trace;    // all consensus rounds
    RoundTrace flood_trace;  // the distance flood from the first endpoint
};
DiameterElection find_diameter_nodes(const CommGraph& g,
                                     const std::vector<NodeId>& nodes);

/**
 * Dual flood from the diameter nodes. A node that hears both ids within
 * one round of the first arrival is a boundary node; the strict sides
 * collect everything two or more rounds closer to one endpoint. Removing B
 * leaves the sides with no connecting edge (verified).
 */
struct BoundarySplit {
    std::vector<NodeId> boundary;
    std::vector<NodeId> side_u;
    std::vector<NodeId> side_v;
    RoundTrace trace;

    bool covers_everything(std::size_t partition_size) const {
        return boundary.size() == partition_size;
    }
};
BoundarySplit find_boundary_nodes(const CommGraph& g,
                                  const std::vector<NodeId>& nodes,
                                  const DiameterPair& dia);

/**
 * Connect the boundary's components by shortest paths inside the partition
 * and report whether the repaired set induces a contractible complex.
 */
struct RepairedBoundary {
    std::vector<NodeId> boundary;  // superset of the input set
    bool was_connected = true;
    bool contractible = false;
    BettiNumbers betti;
};
RepairedBoundary repair_boundary(const CommGraph& g,
                                 const std::vector<NodeId>& nodes,
                                 const std::vector<NodeId>& boundary);

/// Children S1 = side(u) + B and S2 = side(v) + B; a disconnected child is
/// returned as one node set per component.
struct SplitOutcome {
    std::vector<NodeId> s1;
    std::vector<NodeId> s2;
    std::vector<std::vector<NodeId>> child_partitions;
};
SplitOutcome split_partition(const CommGraph& g,
                             const std::vector<NodeId>& nodes,
                             const BoundarySplit& sides,
                             const std::vector<NodeId>& repaired_boundary);

enum class HoleVerdict { HasHole, NoHole, Inconclusive };

struct DetectResult {
    HoleVerdict verdict = HoleVerdict::Inconclusive;
    double rho1 = 0.0;
    double margin = 0.0;  // (rho1 - rho2) / rho1
    int iterations = 0;
    bool retried = false;
    RoundTrace trace;
};

/**
 * Spectral hole detection over the partition: two message-passing power
 * iterations give rho(L1) and rho(rho1 I - L1); a relative margin below
 * tol means a zero eigenvalue, hence a hole. One retry at ten times the
 * iteration cap before reporting Inconclusive.
 */
DetectResult detect_hole(const CommGraph& g, const std::vector<NodeId>& nodes,
                         const LocatorParams& params = {});

struct PartitionRecord {
    int id = -1;
    int parent = -1;
    int generation = 0;
    std::vector<NodeId> nodes;
    std::vector<NodeId> boundary;  // repaired boundary used to split it
    std::string status;            // active|asleep|survivor|split|inconclusive
    std::string detect;            // has-hole|no-hole|inconclusive|skipped
    double margin = 0.0;
    double rho1 = 0.0;
    bool oracle_mismatch = false;  // spectral said hole, exact said none
};

struct SplitRecord {
    int parent_id = -1;
    std::vector<NodeId> s1, s2, boundary;
    bool boundary_was_connected = true;
    bool boundary_contractible = false;
};

struct PhaseTraces {
    RoundTrace f;         // eccentricity
    RoundTrace max;       // consensus elections
    RoundTrace flood;     // boundary floods and repairs
    RoundTrace detect;    // power iterations
};

struct LocalizationResult {
    std::vector<PartitionRecord> partitions;
    std::vector<SplitRecord> splits;
    std::vector<int> survivor_ids;
    std::map<int, std::vector<NodeId>> survivor_cycles;  // partition id -> cycle
    std::vector<PhaseTraces> generation_traces;
    PhaseTraces totals;
    int generations = 0;
    int inconclusive_count = 0;
};

/**
 * The divide-and-conquer localizer. Connected components seed the
 * partition set; every generation detects holes in the active partitions,
 * puts hole-free ones to sleep, and bisects the rest along repaired
 * boundary-node sets until the survivors hug the holes.
 */
LocalizationResult localize_holes(const CommGraph& g,
                                  const LocatorParams& params = {});

}  // namespace ripsnet
