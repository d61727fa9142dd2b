#include "ripsnet/cycles.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ripsnet/homology.hpp"
#include "ripsnet/rips.hpp"

namespace ripsnet {

std::vector<NodeId> canonical_cycle(const std::vector<NodeId>& cycle) {
    if (cycle.empty()) return {};
    const std::size_t k = cycle.size();
    const std::size_t start =
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    const NodeId fwd = cycle[(start + 1) % k];
    const NodeId bwd = cycle[(start + k - 1) % k];
    std::vector<NodeId> out;
    out.reserve(k);
    if (fwd <= bwd)
        for (std::size_t i = 0; i < k; ++i) out.push_back(cycle[(start + i) % k]);
    else
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(cycle[(start + k - i) % k]);
    return out;
}

std::vector<NodeId> shortest_noncontractible_cycle(
    const CommGraph& g, const std::vector<NodeId>& nodes) {
    const RipsComplex x = build_rips(g, nodes);
    if (x.n_edges() < 3) return {};
    const ExactHomology oracle(x);
    if (oracle.betti().b1 == 0) return {};

    std::vector<char> in(g.n, nodes.empty() ? 1 : 0);
    for (NodeId v : nodes) in.at(v) = 1;

    // BFS-tree cycles from every root. Trimming the two tree paths at
    // their deepest common node always leaves a simple cycle, and the
    // candidate chains from one root already span the cycle space, so a
    // non-contractible candidate is guaranteed whenever b1 >= 1.
    std::set<std::vector<NodeId>> seen;
    std::vector<std::vector<NodeId>> candidates;
    std::vector<int> dist(g.n), parent(g.n);
    for (NodeId root : x.vertices) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<NodeId> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const NodeId u = q.front();
            q.pop();
            for (NodeId v : g.adj[u]) {  // ascending: parents are smallest
                if (!in[v] || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push(v);
            }
        }
        auto tree_path = [&](NodeId v) {  // v .. root
            std::vector<NodeId> p;
            for (NodeId c = v; c != -1; c = parent[c]) p.push_back(c);
            return p;
        };
        for (const auto& [a, b] : x.edges) {
            if (parent[a] == b || parent[b] == a) continue;  // tree edge
            std::vector<NodeId> pa = tree_path(a);  // a..root
            std::vector<NodeId> pb = tree_path(b);
            // Drop the common tail shared by both paths.
            while (pa.size() > 1 && pb.size() > 1 &&
                   pa[pa.size() - 2] == pb[pb.size() - 2]) {
                pa.pop_back();
                pb.pop_back();
            }
            if (pa.size() + pb.size() < 5) continue;  // triangle: bounds
            // Cycle: a .. meet .. b, then the edge b-a closes it. The meet
            // node sits at the end of both paths, so it enters once.
            std::vector<NodeId> cyc(pa);
            cyc.insert(cyc.end(), std::next(pb.rbegin()), pb.rend());
            cyc = canonical_cycle(cyc);
            if (seen.insert(cyc).second) candidates.push_back(std::move(cyc));
        }
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const std::vector<NodeId>& l, const std::vector<NodeId>& r) {
                  if (l.size() != r.size()) return l.size() < r.size();
                  return l < r;
              });
    for (const auto& cyc : candidates) {
        const Chain c = cycle_chain(x, cyc);
        if (!oracle.is_boundary(c)) return cyc;
    }
    return {};
}

}  // namespace ripsnet
