#pragma once

#include <array>
#include <vector>

#include "ripsnet/deploy.hpp"
#include "ripsnet/types.hpp"

namespace ripsnet {

/**
 * Rips complex of a communication graph, truncated at dimension 2: the
 * vertices, the edges, and one triangle per 3-clique. Simplices are stored
 * canonically with strictly increasing vertex ids; that canonical order
 * carries the implicit positive orientation, and reversing two adjacent
 * vertices flips the sign of a simplex wherever chains reference it.
 */
struct RipsComplex {
    std::vector<NodeId> vertices;                       // sorted
    std::vector<std::pair<NodeId, NodeId>> edges;       // u < v, lex sorted
    std::vector<std::array<NodeId, 3>> triangles;       // a < b < c, lex sorted

    int vertex_index(NodeId v) const;
    int edge_index(NodeId u, NodeId v) const;           // -1 when absent
    int triangle_index(NodeId a, NodeId b, NodeId c) const;

    std::size_t n_vertices() const { return vertices.size(); }
    std::size_t n_edges() const { return edges.size(); }
    std::size_t n_triangles() const { return triangles.size(); }
};

/**
 * Build the Rips complex of the subgraph induced on `nodes` (the whole
 * graph when empty). Triangles are exactly the 3-cliques.
 */
RipsComplex build_rips(const CommGraph& g,
                       const std::vector<NodeId>& nodes = {});

/**
 * Boundary operator as a sparse integer matrix with entries in {-1, 0, +1}.
 * k = 1: rows are vertices, columns edges, column (u,v) = v - u.
 * k = 2: rows are edges, columns triangles, column (a,b,c) =
 *        +(b,c) - (a,c) + (a,b).
 */
spmat_i boundary_matrix(int k, const RipsComplex& x);

}  // namespace ripsnet
