#include "ripsnet/locator.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "ripsnet/graph_ops.hpp"
#include "ripsnet/homology.hpp"
#include "ripsnet/laplacian.hpp"

namespace ripsnet {

namespace {

constexpr double kNotACandidate = -1e18;

NodeId elect_smallest(const CommGraph& g, const std::vector<NodeId>& nodes,
                      const std::set<NodeId>& candidates, RoundTrace& into) {
    // Min-id consensus among the candidates, run as a max over -id.
    std::map<NodeId, double> init;
    for (NodeId v : nodes)
        init[v] = candidates.count(v) ? -static_cast<double>(v)
                                      : kNotACandidate;
    const ConsensusResult res = max_consensus(g, nodes, init);
    into.merge_from(res.trace);
    return static_cast<NodeId>(-res.value.at(nodes.front()));
}

}  // namespace

DiameterElection find_diameter_nodes(const CommGraph& g,
                                     const std::vector<NodeId>& nodes) {
    DiameterElection out;
    if (nodes.size() == 1) {
        out.pair = {nodes.front(), nodes.front(), 0};
        out.f[nodes.front()] = 0;
        return out;
    }

    EccentricityResult ecc = run_eccentricity(g, nodes);
    out.f = ecc.f;
    out.f_trace = ecc.trace;

    std::map<NodeId, double> f_values;
    for (const auto& [v, f] : ecc.f) f_values[v] = f;
    const ConsensusResult fmax_run = max_consensus(g, nodes, f_values);
    out.max_trace.merge_from(fmax_run.trace);
    const int fmax =
        static_cast<int>(fmax_run.value.at(nodes.front()));

    std::set<NodeId> candidates;
    for (const auto& [v, f] : ecc.f)
        if (f == fmax) candidates.insert(v);
    const NodeId u = elect_smallest(g, nodes, candidates, out.max_trace);

    // Flood from the winner: arrival rounds are distances, and the far
    // rim at distance f(u) holds the second endpoint candidates.
    FloodResult flood = flood_from(g, nodes, {u});
    out.flood_trace = flood.trace;
    std::set<NodeId> far;
    for (NodeId v : nodes)
        if (flood.received.at(v).at(u) == fmax) far.insert(v);
    const NodeId v = elect_smallest(g, nodes, far, out.max_trace);

    out.pair = {u, v, fmax};
    return out;
}

BoundarySplit find_boundary_nodes(const CommGraph& g,
                                  const std::vector<NodeId>& nodes,
                                  const DiameterPair& dia) {
    if (dia.degenerate())
        throw std::invalid_argument(
            "find_boundary_nodes: need two distinct diameter nodes");

    BoundarySplit out;
    FloodResult flood = flood_from(g, nodes, {dia.u, dia.v});
    out.trace = flood.trace;
    for (NodeId x : nodes) {
        const auto& heard = flood.received.at(x);
        const int du = heard.at(dia.u);
        const int dv = heard.at(dia.v);
        if (std::abs(du - dv) <= 1)
            out.boundary.push_back(x);
        else if (du < dv)
            out.side_u.push_back(x);
        else
            out.side_v.push_back(x);
    }

    // The meeting front separates: no edge may cross between the sides.
    std::vector<char> in_v(g.n, 0);
    for (NodeId x : out.side_v) in_v[x] = 1;
    for (NodeId x : out.side_u)
        for (NodeId y : g.adj[x])
            if (in_v[y])
                throw std::logic_error(
                    "boundary set failed to separate the partition");
    return out;
}

RepairedBoundary repair_boundary(const CommGraph& g,
                                 const std::vector<NodeId>& nodes,
                                 const std::vector<NodeId>& boundary) {
    if (boundary.empty())
        throw std::invalid_argument("repair_boundary: empty boundary");

    RepairedBoundary out;
    std::set<NodeId> repaired(boundary.begin(), boundary.end());
    std::vector<char> in_part(g.n, 0);
    for (NodeId v : nodes) in_part[v] = 1;

    auto components_of = [&](const std::set<NodeId>& b) {
        const std::vector<NodeId> list(b.begin(), b.end());
        return connected_components(g, list);
    };

    auto comps = components_of(repaired);
    out.was_connected = comps.size() <= 1;
    while (comps.size() > 1) {
        // Shortest connector from the first component to any other, found
        // by a flood out of the component: smallest distance, then
        // smallest id.
        std::vector<int> dist(g.n, -1);
        std::queue<NodeId> q;
        for (NodeId s : comps[0]) {
            dist[s] = 0;
            q.push(s);
        }
        while (!q.empty()) {
            const NodeId u = q.front();
            q.pop();
            for (NodeId v : g.adj[u]) {
                if (!in_part[v] || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
        NodeId target = -1;
        int best = -1;
        for (std::size_t c = 1; c < comps.size(); ++c) {
            for (NodeId v : comps[c]) {
                if (dist[v] < 0) continue;
                if (target < 0 || dist[v] < best ||
                    (dist[v] == best && v < target)) {
                    best = dist[v];
                    target = v;
                }
            }
        }
        if (target < 0)
            throw std::runtime_error(
                "repair_boundary: boundary components not connected within "
                "the partition");
        // Lexicographic backtrack toward the component.
        NodeId cur = target;
        while (dist[cur] > 0) {
            for (NodeId w : g.adj[cur]) {
                if (in_part[w] && dist[w] == dist[cur] - 1) {
                    cur = w;
                    break;
                }
            }
            repaired.insert(cur);
        }
        comps = components_of(repaired);
    }

    out.boundary.assign(repaired.begin(), repaired.end());
    out.betti = betti_exact(build_rips(g, out.boundary));
    out.contractible = out.betti.b0 == 1 && out.betti.b1 == 0;
    return out;
}

SplitOutcome split_partition(const CommGraph& g,
                             const std::vector<NodeId>& nodes,
                             const BoundarySplit& sides,
                             const std::vector<NodeId>& repaired_boundary) {
    SplitOutcome out;
    std::set<NodeId> s1(sides.side_u.begin(), sides.side_u.end());
    std::set<NodeId> s2(sides.side_v.begin(), sides.side_v.end());
    for (NodeId b : repaired_boundary) {
        s1.insert(b);
        s2.insert(b);
    }
    (void)nodes;
    out.s1.assign(s1.begin(), s1.end());
    out.s2.assign(s2.begin(), s2.end());
    for (const auto& side : {out.s1, out.s2}) {
        if (side.empty()) continue;
        for (auto& comp : connected_components(g, side))
            out.child_partitions.push_back(std::move(comp));
    }
    return out;
}

DetectResult detect_hole(const CommGraph& g, const std::vector<NodeId>& nodes,
                         const LocatorParams& params) {
    DetectResult out;
    const RipsComplex x = build_rips(g, nodes);
    if (x.n_edges() == 0) {
        // A bare point set carries no 1-cycles.
        out.verdict = HoleVerdict::NoHole;
        out.margin = 1.0;
        return out;
    }
    const spmat_t L = laplacian1(x);
    const int base_cap = params.max_iters > 0
                             ? params.max_iters
                             : 10 * static_cast<int>(x.n_edges());

    auto run = [&](const spmat_t& m, std::uint64_t seed, int cap) {
        auto r = distributed_power_iteration(g, nodes, x, m, seed, cap);
        out.trace.merge_from(r.trace);
        out.iterations += r.iterations;
        return r;
    };

    auto pi1 = run(L, params.seed, base_cap);
    if (!pi1.converged) {
        out.retried = true;
        pi1 = run(L, params.seed, 10 * base_cap);
        if (!pi1.converged) return out;
    }
    out.rho1 = pi1.value;
    if (out.rho1 <= 0.0) {
        out.verdict = HoleVerdict::HasHole;
        return out;
    }

    spmat_t shifted = -L;
    for (int i = 0; i < shifted.rows(); ++i)
        shifted.coeffRef(i, i) += out.rho1;
    shifted.makeCompressed();

    auto pi2 = run(shifted, params.seed + 1, base_cap);
    if (!pi2.converged) {
        out.retried = true;
        pi2 = run(shifted, params.seed + 1, 10 * base_cap);
        if (!pi2.converged) return out;
    }
    out.margin = (out.rho1 - pi2.value) / out.rho1;
    out.verdict = out.margin < params.tol ? HoleVerdict::HasHole
                                          : HoleVerdict::NoHole;
    return out;
}

LocalizationResult localize_holes(const CommGraph& g,
                                  const LocatorParams& params) {
    LocalizationResult res;

    std::vector<int> active;
    for (auto& comp : connected_components(g)) {
        PartitionRecord rec;
        rec.id = static_cast<int>(res.partitions.size());
        rec.generation = 0;
        rec.nodes = std::move(comp);
        rec.status = "active";
        rec.detect = "skipped";
        active.push_back(rec.id);
        res.partitions.push_back(std::move(rec));
    }

    for (int gen = 0; gen < params.max_generations && !active.empty(); ++gen) {
        res.generations = gen + 1;
        PhaseTraces traces;
        std::vector<int> next_active;

        for (const int id : active) {
            const std::vector<NodeId> nodes = res.partitions[id].nodes;

            const DetectResult det = detect_hole(g, nodes, params);
            traces.detect.merge_from(det.trace);
            {
                PartitionRecord& rec = res.partitions[id];
                rec.margin = det.margin;
                rec.rho1 = det.rho1;
                rec.detect = det.verdict == HoleVerdict::HasHole ? "has-hole"
                             : det.verdict == HoleVerdict::NoHole
                                 ? "no-hole"
                                 : "inconclusive";
            }
            if (det.verdict == HoleVerdict::Inconclusive) {
                res.partitions[id].status = "inconclusive";
                ++res.inconclusive_count;
                continue;
            }
            if (det.verdict == HoleVerdict::NoHole) {
                res.partitions[id].status = "asleep";
                continue;
            }

            // Hole present. Small partitions stop once they are within a
            // few girths of their cycle; everything else gets bisected.
            if (static_cast<int>(nodes.size()) <= params.girth_cap) {
                const auto cyc = shortest_noncontractible_cycle(g, nodes);
                if (cyc.empty()) {
                    // The exact oracle vetoes the spectral verdict.
                    res.partitions[id].status = "asleep";
                    res.partitions[id].oracle_mismatch = true;
                    continue;
                }
                if (nodes.size() <= 3 * cyc.size()) {
                    res.partitions[id].status = "survivor";
                    res.survivor_ids.push_back(id);
                    res.survivor_cycles[id] = cyc;
                    continue;
                }
            }

            const DiameterElection dia = find_diameter_nodes(g, nodes);
            traces.f.merge_from(dia.f_trace);
            traces.max.merge_from(dia.max_trace);
            traces.flood.merge_from(dia.flood_trace);
            if (dia.pair.degenerate()) {
                res.partitions[id].status = "survivor";
                res.survivor_ids.push_back(id);
                continue;
            }

            const BoundarySplit sides = find_boundary_nodes(g, nodes, dia.pair);
            traces.flood.merge_from(sides.trace);
            if (sides.covers_everything(nodes.size())) {
                res.partitions[id].status = "survivor";
                res.survivor_ids.push_back(id);
                continue;
            }

            const RepairedBoundary rb = repair_boundary(g, nodes, sides.boundary);
            const SplitOutcome so = split_partition(g, nodes, sides, rb.boundary);
            if (so.s1.size() == nodes.size() || so.s2.size() == nodes.size()) {
                // A child swallowed the parent: no progress from here on.
                res.partitions[id].status = "survivor";
                res.survivor_ids.push_back(id);
                continue;
            }

            res.splits.push_back({id, so.s1, so.s2, rb.boundary,
                                  rb.was_connected, rb.contractible});
            res.partitions[id].status = "split";
            res.partitions[id].boundary = rb.boundary;
            for (const auto& child : so.child_partitions) {
                PartitionRecord rec;
                rec.id = static_cast<int>(res.partitions.size());
                rec.parent = id;
                rec.generation = gen + 1;
                rec.nodes = child;
                rec.status = "active";
                rec.detect = "skipped";
                next_active.push_back(rec.id);
                res.partitions.push_back(std::move(rec));
            }
        }

        res.generation_traces.push_back(traces);
        res.totals.f.merge_from(traces.f);
        res.totals.max.merge_from(traces.max);
        res.totals.flood.merge_from(traces.flood);
        res.totals.detect.merge_from(traces.detect);
        active = std::move(next_active);
    }

    // Survivors elected before their cycle was extracted.
    for (const int id : res.survivor_ids) {
        if (res.survivor_cycles.count(id)) continue;
        const auto cyc =
            shortest_noncontractible_cycle(g, res.partitions[id].nodes);
        if (cyc.empty())
            res.partitions[id].oracle_mismatch = true;
        else
            res.survivor_cycles[id] = cyc;
    }
    std::sort(res.survivor_ids.begin(), res.survivor_ids.end());
    return res;
}

}  // namespace ripsnet
