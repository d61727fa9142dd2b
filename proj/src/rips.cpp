#include "ripsnet/rips.hpp"

#include <algorithm>
#include <stdexcept>

namespace ripsnet {

int RipsComplex::vertex_index(NodeId v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
}

int RipsComplex::edge_index(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    const std::pair<NodeId, NodeId> key{u, v};
    const auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
}

int RipsComplex::triangle_index(NodeId a, NodeId b, NodeId c) const {
    std::array<NodeId, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    const auto it = std::lower_bound(triangles.begin(), triangles.end(), key);
    if (it == triangles.end() || *it != key) return -1;
    return static_cast<int>(it - triangles.begin());
}

RipsComplex build_rips(const CommGraph& g, const std::vector<NodeId>& nodes) {
    RipsComplex x;
    std::vector<char> in(g.n, nodes.empty() ? 1 : 0);
    for (NodeId v : nodes) in.at(v) = 1;
    for (NodeId v = 0; v < g.n; ++v)
        if (in[v]) x.vertices.push_back(v);

    for (NodeId u : x.vertices)
        for (NodeId v : g.adj[u])
            if (u < v && in[v]) x.edges.emplace_back(u, v);

    // 3-cliques: for each edge (u, v), common neighbors w > v.
    for (const auto& [u, v] : x.edges) {
        const auto& nu = g.adj[u];
        const auto& nv = g.adj[v];
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) ++iu;
            else if (*iv < *iu) ++iv;
            else {
                if (in[*iu]) x.triangles.push_back({u, v, *iu});
                ++iu;
                ++iv;
            }
        }
    }
    std::sort(x.triangles.begin(), x.triangles.end());
    return x;
}

spmat_i boundary_matrix(int k, const RipsComplex& x) {
    using T = Eigen::Triplet<int>;
    std::vector<T> trips;
    if (k == 1) {
        spmat_i m(static_cast<int>(x.n_vertices()),
                  static_cast<int>(x.n_edges()));
        trips.reserve(2 * x.n_edges());
        for (int j = 0; j < static_cast<int>(x.n_edges()); ++j) {
            const auto& [u, v] = x.edges[j];
            trips.emplace_back(x.vertex_index(u), j, -1);
            trips.emplace_back(x.vertex_index(v), j, +1);
        }
        m.setFromTriplets(trips.begin(), trips.end());
        return m;
    }
    if (k == 2) {
        spmat_i m(static_cast<int>(x.n_edges()),
                  static_cast<int>(x.n_triangles()));
        trips.reserve(3 * x.n_triangles());
        for (int j = 0; j < static_cast<int>(x.n_triangles()); ++j) {
            const auto& [a, b, c] = x.triangles[j];
            trips.emplace_back(x.edge_index(b, c), j, +1);
            trips.emplace_back(x.edge_index(a, c), j, -1);
            trips.emplace_back(x.edge_index(a, b), j, +1);
        }
        m.setFromTriplets(trips.begin(), trips.end());
        return m;
    }
    throw std::invalid_argument("boundary_matrix: k must be 1 or 2");
}

}  // namespace ripsnet
