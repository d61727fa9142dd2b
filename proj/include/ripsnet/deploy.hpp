#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ripsnet/types.hpp"

namespace ripsnet {

/**
 * Undirected communication graph over dense node ids. This is the only
 * input the detection and localization algorithms may read; positions stay
 * behind in the Deployment and are used by test oracles and plotting only.
 */
struct CommGraph {
    int n = 0;
    std::vector<std::vector<NodeId>> adj;  // sorted neighbor lists

    explicit CommGraph(int n_ = 0) : n(n_), adj(n_) {}

    bool has_edge(NodeId a, NodeId b) const;
    void add_edge(NodeId a, NodeId b);
    std::size_t edge_count() const;

    /// All edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<NodeId, NodeId>> edges() const;
};

struct FaultRecord {
    enum class Kind { CoverageHole, Wormhole };

    Kind kind = Kind::CoverageHole;

    // Coverage hole geometry.
    Point center{};
    double radius = 0.0;
    // Surviving nodes within r_c of the hole rim, recorded at injection
    // time under the post-removal numbering. Test oracle only.
    std::vector<NodeId> rim_nodes;

    // Wormhole geometry: two colluder positions and the vicinity radius.
    Point p1{}, p2{};
    double r_w = 0.0;
};

/**
 * A sensor deployment in the unit square. Nodes communicate within r_c
 * (closed ball) and sense within r_s; construction enforces
 * r_s >= r_c / sqrt(3) so clique hulls are covered.
 */
struct Deployment {
    std::vector<Point> positions;
    double r_c = 0.0;
    double r_s = 0.0;
    std::uint64_t seed = 0;
    std::string sampler = "uniform";
    std::vector<FaultRecord> faults;

    int n() const { return static_cast<int>(positions.size()); }
};

/// Result of the rasterized coverage oracle.
struct CoverageTruth {
    int hole_count = 0;
    // For each interior uncovered component, the nodes whose sensing disks
    // bound it.
    std::vector<std::vector<NodeId>> rims;
};

/**
 * Sample a deployment. Samplers: "uniform" (default), "clustered"
 * (truncated Gaussian mixture), "grid" (n must be a perfect square),
 * "disk" (uniform in the inscribed disk). Deterministic for a fixed seed.
 *
 * Throws std::invalid_argument when the radius constraint
 * r_s >= r_c / sqrt(3) is violated or parameters are out of range.
 */
Deployment generate_deployment(int n, double r_c, double r_s,
                               std::uint64_t seed,
                               const std::string& sampler = "uniform");

/**
 * Build the communication graph: edge (i, j) iff the Euclidean distance is
 * <= r_c. Wormhole faults add the complete bipartite edge set between the
 * two vicinity node sets.
 */
CommGraph build_comm_graph(const Deployment& d);

/// Nodes within r_w of a wormhole endpoint, per fault.
/// first = vicinity of p1, second = vicinity of p2.
std::pair<std::vector<NodeId>, std::vector<NodeId>>
wormhole_vicinities(const Deployment& d, const FaultRecord& f);

/**
 * Remove every node inside the disk (closed) and append a FaultRecord with
 * the ground-truth rim set. Node ids are renumbered to stay dense; rim ids
 * refer to the new numbering.
 *
 * Throws std::invalid_argument if the disk misses the region interior or
 * swallows the entire network.
 */
Deployment inject_hole(const Deployment& d, Point center, double radius);

/**
 * Append a wormhole fault; the spurious bipartite links materialize in
 * build_comm_graph. The two vicinity disks must be disjoint.
 */
Deployment inject_wormhole(const Deployment& d, Point p1, Point p2,
                           double r_w);

/**
 * Rasterize the unit square at the given cell size (default r_s / 8) and
 * count interior uncovered connected components, excluding anything that
 * reaches the region border (the outer face).
 *
 * Throws std::invalid_argument if cell > r_s / 4.
 */
CoverageTruth coverage_ground_truth(const Deployment& d, double cell = 0.0);

}  // namespace ripsnet
