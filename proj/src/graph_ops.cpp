#include "ripsnet/graph_ops.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ripsnet {

namespace {

std::vector<char> membership(const CommGraph& g,
                             const std::vector<NodeId>& nodes) {
    std::vector<char> in(g.n, nodes.empty() ? 1 : 0);
    for (NodeId v : nodes) in.at(v) = 1;
    return in;
}

}  // namespace

std::vector<int> bfs_distances(const CommGraph& g, NodeId source,
                               const std::vector<NodeId>& nodes) {
    const std::vector<char> in = membership(g, nodes);
    std::vector<int> d(g.n, -1);
    if (source < 0 || source >= g.n || !in[source]) return d;
    std::queue<NodeId> q;
    d[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        for (NodeId v : g.adj[u]) {
            if (!in[v] || d[v] >= 0) continue;
            d[v] = d[u] + 1;
            q.push(v);
        }
    }
    return d;
}

std::vector<std::vector<NodeId>> connected_components(
    const CommGraph& g, const std::vector<NodeId>& nodes) {
    const std::vector<char> in = membership(g, nodes);
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<NodeId>> comps;
    for (NodeId s = 0; s < g.n; ++s) {
        if (!in[s] || seen[s]) continue;
        std::vector<NodeId> comp;
        std::queue<NodeId> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            const NodeId u = q.front();
            q.pop();
            comp.push_back(u);
            for (NodeId v : g.adj[u]) {
                if (!in[v] || seen[v]) continue;
                seen[v] = 1;
                q.push(v);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const CommGraph& g, const std::vector<NodeId>& nodes) {
    if (nodes.empty()) return false;
    const auto d = bfs_distances(g, nodes.front(), nodes);
    for (NodeId v : nodes)
        if (d[v] < 0) return false;
    return true;
}

CommGraph induced_graph(const CommGraph& g, const std::vector<NodeId>& keep) {
    const std::vector<char> in = membership(g, keep);
    CommGraph out(g.n);
    for (NodeId u = 0; u < g.n; ++u) {
        if (!in[u]) continue;
        for (NodeId v : g.adj[u])
            if (in[v] && u < v) out.add_edge(u, v);
    }
    return out;
}

std::vector<NodeId> lex_shortest_path(const CommGraph& g, NodeId a, NodeId b) {
    const auto dist_to_b = bfs_distances(g, b);
    if (a < 0 || a >= g.n || dist_to_b[a] < 0) return {};
    std::vector<NodeId> path{a};
    NodeId cur = a;
    while (cur != b) {
        NodeId next = -1;
        for (NodeId v : g.adj[cur]) {  // sorted, first hit is smallest id
            if (dist_to_b[v] == dist_to_b[cur] - 1) {
                next = v;
                break;
            }
        }
        if (next < 0) throw std::logic_error("broken BFS field");
        path.push_back(next);
        cur = next;
    }
    return path;
}

}  // namespace ripsnet
