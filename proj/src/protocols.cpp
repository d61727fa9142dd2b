#include "ripsnet/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ripsnet/graph_ops.hpp"
#include "ripsnet/laplacian.hpp"

namespace ripsnet {

namespace {

std::vector<NodeId> resolve_nodes(const CommGraph& g,
                                  const std::vector<NodeId>& nodes) {
    if (!nodes.empty()) return nodes;
    std::vector<NodeId> all(g.n);
    for (NodeId v = 0; v < g.n; ++v) all[v] = v;
    return all;
}

}  // namespace

EccentricityResult run_eccentricity(const CommGraph& g,
                                    const std::vector<NodeId>& nodes_in,
                                    int retention) {
    const std::vector<NodeId> nodes = resolve_nodes(g, nodes_in);
    if (!is_connected(g, nodes))
        throw std::invalid_argument(
            "run_eccentricity: partition must be connected");

    EccentricityResult res;
    res.trace.protocol = "eccentricity";
    SyncNet<NodeId> net(g, nodes);

    struct State {
        std::map<NodeId, int> table;  // discovered id -> round
        int last_discovery = 0;
        bool stopped = false;
    };
    std::map<NodeId, State> st;

    for (NodeId v : nodes) {
        st[v].table.emplace(v, 0);  // discover itself
        net.send(v, v);
        res.trace.count_broadcast(v, 1);
        res.trace.note_table_size(v, 1);
    }

    while (net.deliver()) {
        const int n = net.round();
        for (NodeId v : nodes) {
            State& s = st[v];
            if (s.stopped) continue;
            std::set<NodeId> fresh;
            for (const auto& [from, id] : net.inbox(v))
                if (!s.table.count(id)) fresh.insert(id);
            if (!fresh.empty()) {
                for (NodeId id : fresh) {
                    net.send(v, id);  // rebroadcast each discovery once
                    s.table.emplace(id, n);
                }
                res.trace.count_broadcast(v, static_cast<long>(fresh.size()));
                s.last_discovery = n;
            } else {
                res.f[v] = s.last_discovery;
                s.stopped = true;
            }
            res.trace.note_table_size(v, static_cast<long>(s.table.size()));
            // Entries older than the retention window are evicted; the
            // duplicates they would have caught can no longer arrive.
            if (retention != kUnboundedRetention)
                std::erase_if(s.table, [&](const auto& kv) {
                    return kv.second <= n - retention;
                });
        }
    }
    res.trace.rounds = net.round();
    for (NodeId v : nodes)
        if (!st[v].stopped) res.f[v] = st[v].last_discovery;
    return res;
}

ConsensusResult max_consensus(const CommGraph& g,
                              const std::vector<NodeId>& nodes_in,
                              const std::map<NodeId, double>& init) {
    const std::vector<NodeId> nodes = resolve_nodes(g, nodes_in);
    ConsensusResult res;
    res.trace.protocol = "max_consensus";
    using Msg = std::pair<double, NodeId>;  // value, witness
    SyncNet<Msg> net(g, nodes);

    for (NodeId v : nodes) {
        const double value = init.at(v);
        res.value[v] = value;
        res.witness[v] = v;
        net.send(v, {value, v});
        res.trace.count_broadcast(v, 2);
        res.trace.note_table_size(v, 2);
    }

    while (net.deliver()) {
        for (NodeId v : nodes) {
            double best = res.value[v];
            NodeId wit = res.witness[v];
            bool value_improved = false;
            for (const auto& [from, msg] : net.inbox(v)) {
                if (msg.first > best) {
                    best = msg.first;
                    wit = msg.second;
                    value_improved = true;
                } else if (msg.first == best && msg.second < wit) {
                    wit = msg.second;  // tie: remember the smaller witness
                }
            }
            res.witness[v] = wit;
            // Only a strictly larger value is a discovery worth gossiping.
            if (value_improved) {
                res.value[v] = best;
                net.send(v, {best, wit});
                res.trace.count_broadcast(v, 2);
            }
        }
    }
    res.trace.rounds = net.round();
    return res;
}

FloodResult flood_from(const CommGraph& g, const std::vector<NodeId>& nodes_in,
                       const std::vector<NodeId>& sources) {
    if (sources.empty())
        throw std::invalid_argument("flood_from: need at least one source");
    const std::vector<NodeId> nodes = resolve_nodes(g, nodes_in);

    FloodResult res;
    res.trace.protocol = "flood";
    SyncNet<NodeId> net(g, nodes);

    for (NodeId s : sources) {
        res.received[s].emplace(s, 0);
        res.first_arrival[s] = 0;
        net.send(s, s);
        res.trace.count_broadcast(s, 1);
        res.trace.note_table_size(s, 1);
    }

    while (net.deliver()) {
        const int n = net.round();
        for (NodeId v : nodes) {
            auto& heard = res.received[v];
            std::set<NodeId> fresh;
            for (const auto& [from, src] : net.inbox(v))
                if (!heard.count(src)) fresh.insert(src);
            for (NodeId src : fresh) {
                heard.emplace(src, n);
                if (!res.first_arrival.count(v)) res.first_arrival[v] = n;
                net.send(v, src);
            }
            if (!fresh.empty())
                res.trace.count_broadcast(v, static_cast<long>(fresh.size()));
            res.trace.note_table_size(v, static_cast<long>(heard.size()));
        }
    }
    res.trace.rounds = net.round();
    return res;
}

DistributedPIResult distributed_power_iteration(
    const CommGraph& g, const std::vector<NodeId>& nodes_in,
    const RipsComplex& x, const spmat_t& L, std::uint64_t seed, int max_iters,
    double rel_change, double stop_above) {
    const std::vector<NodeId> nodes = resolve_nodes(g, nodes_in);
    const int dim = static_cast<int>(L.rows());
    if (dim == 0 || static_cast<std::size_t>(dim) != x.n_edges())
        throw std::invalid_argument(
            "distributed_power_iteration: Laplacian does not match complex");
    if (max_iters <= 0) max_iters = 10 * dim;

    DistributedPIResult res;
    res.trace.protocol = "power_iteration";

    // Edge coordinate (u, v) lives at its smaller endpoint.
    std::map<NodeId, std::vector<int>> owned;
    for (int e = 0; e < dim; ++e) owned[x.edges[e].first].push_back(e);

    // Static per-iteration message load: every owner broadcasts its
    // coordinates, every node relays what it heard once. Two rounds of
    // dissemination reach every coupled coordinate, since coupled edges
    // share a vertex.
    std::map<NodeId, long> iter_words;
    for (NodeId v : nodes) {
        const long own = owned.count(v) ? static_cast<long>(owned[v].size()) : 0;
        long heard = 0;
        for (NodeId u : g.adj[v]) {
            if (!std::binary_search(nodes.begin(), nodes.end(), u)) continue;
            heard += owned.count(u) ? static_cast<long>(owned[u].size()) : 0;
        }
        iter_words[v] = own + heard;  // broadcast own, relay heard
        res.trace.note_table_size(v, own + heard);
    }

    // Spanning tree for the exact normalization sums, rooted at the
    // smallest id; children visited ascending so the summation order is
    // reproducible.
    const NodeId root = nodes.front();
    const auto dist_from_root = bfs_distances(g, root, nodes);
    std::map<NodeId, std::vector<NodeId>> children;
    int depth = 0;
    for (NodeId v : nodes) {
        depth = std::max(depth, dist_from_root[v]);
        if (v == root) continue;
        for (NodeId u : g.adj[v]) {  // smallest qualifying neighbor is parent
            if (std::binary_search(nodes.begin(), nodes.end(), u) &&
                dist_from_root[u] == dist_from_root[v] - 1) {
                children[u].push_back(v);
                break;
            }
        }
    }

    // Deterministic post-order accumulation of per-node terms; leaves
    // first, children ascending within a depth.
    std::vector<NodeId> sum_order(nodes);
    std::stable_sort(sum_order.begin(), sum_order.end(),
                     [&](NodeId a, NodeId b) {
                         return dist_from_root[a] > dist_from_root[b];
                     });
    std::vector<double> partial(g.n, 0.0);
    auto tree_sum = [&](const std::vector<double>& term_of_node) {
        for (NodeId v : sum_order) {
            double s = term_of_node[v];
            const auto it = children.find(v);
            if (it != children.end())
                for (NodeId c : it->second) s += partial[c];
            partial[v] = s;
        }
        return partial[root];
    };

    vec_t xv = seeded_start_vector(dim, seed);
    std::vector<double> node_dot(g.n, 0.0), node_norm(g.n, 0.0);
    double prev = 0.0;
    int streak = 0;
    constexpr int kStreak = 8;

    for (int it = 1; it <= max_iters; ++it) {
        // Row gather at each owner: y_e = sum_f L(e, f) x_f, columns of the
        // symmetric L giving the rows, coordinates ascending.
        vec_t y(dim);
        for (int e = 0; e < dim; ++e) {
            double acc = 0.0;
            for (spmat_t::InnerIterator itL(L, e); itL; ++itL)
                acc += itL.value() * xv(itL.row());
            y(e) = acc;
        }
        for (NodeId v : nodes) {
            node_dot[v] = 0.0;
            node_norm[v] = 0.0;
        }
        for (const auto& [v, es] : owned) {
            for (int e : es) {
                node_dot[v] += xv(e) * y(e);
                node_norm[v] += y(e) * y(e);
            }
        }
        const double lambda = tree_sum(node_dot);
        const double norm2 = tree_sum(node_norm);

        // Accounting: dissemination, two sum words up the tree per node,
        // two result words flooding back down.
        for (NodeId v : nodes) res.trace.count_broadcast(v, iter_words[v] + 4);
        res.trace.rounds += 2 + 2 * depth;

        res.iterations = it;
        res.value = lambda;
        const double ynorm = std::sqrt(norm2);
        if (ynorm == 0.0) {
            res.value = 0.0;
            res.converged = true;
            return res;
        }
        if (lambda >= stop_above) {
            res.converged = true;  // certified bound crossing
            return res;
        }
        if (std::abs(lambda - prev) <=
            rel_change * std::max(std::abs(lambda), 1e-30)) {
            if (++streak >= kStreak) {
                res.converged = true;
                return res;
            }
        } else {
            streak = 0;
        }
        prev = lambda;
        xv = y / ynorm;
    }
    return res;
}

}  // namespace ripsnet
