#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ripsnet/deploy.hpp"
#include "ripsnet/homology.hpp"
#include "ripsnet/rips.hpp"

namespace ripsnet::testing {

inline CommGraph make_graph(int n,
                            std::initializer_list<std::pair<int, int>> edges) {
    CommGraph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

/// Random unit-disk graph for property tests; returns the graph of a
/// seeded uniform deployment.
inline CommGraph random_disk_graph(int n, double r_c, std::uint64_t seed) {
    const Deployment d = generate_deployment(n, r_c, r_c, seed);
    return build_comm_graph(d);
}

/**
 * Hand-built 8-vertex fixture: a triangulated hexagonal fan of four
 * triangles sharing a two-edge interface with an open pentagon, so the
 * complex has exactly one hole. Returns the graph; the canonical chains
 * below walk its outer boundary, the fan boundary, and the pentagon.
 */
inline CommGraph fan_pentagon_graph() {
    return make_graph(8, {{0, 1},
                          {0, 2},
                          {1, 2},
                          {1, 3},
                          {1, 4},
                          {1, 5},
                          {2, 4},
                          {3, 4},
                          {3, 5},
                          {4, 7},
                          {5, 6},
                          {6, 7}});
}

/// Outer boundary walk of the fixture: 0-1-5-6-7-4-2-0.
inline Chain fan_pentagon_outer(const RipsComplex& x) {
    return cycle_chain(x, {0, 1, 5, 6, 7, 4, 2});
}

/// Boundary walk of the triangulated fan region: 0-1-5-3-4-2-0.
inline Chain fan_pentagon_fan_loop(const RipsComplex& x) {
    return cycle_chain(x, {0, 1, 5, 3, 4, 2});
}

/// The pentagon enclosing the hole: 3-5-6-7-4-3.
inline Chain fan_pentagon_hole_loop(const RipsComplex& x) {
    return cycle_chain(x, {3, 5, 6, 7, 4});
}

}  // namespace ripsnet::testing
