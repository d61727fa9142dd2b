#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "ripsnet/deploy.hpp"
#include "ripsnet/rips.hpp"
#include "test_util.hpp"

using namespace ripsnet;

TEST_CASE("singleton deployment") {
    const Deployment d = generate_deployment(1, 0.2, 0.15, 0);
    REQUIRE(d.n() == 1);
    REQUIRE(d.faults.empty());
    REQUIRE(d.positions[0].x >= 0.0);
    REQUIRE(d.positions[0].x < 1.0);
    REQUIRE(d.positions[0].y >= 0.0);
    REQUIRE(d.positions[0].y < 1.0);
}

TEST_CASE("radius constraint boundary") {
    const double r_c = 0.2;
    REQUIRE_THROWS_AS(
        generate_deployment(50, r_c, r_c / std::sqrt(3.0) - 1e-6, 0),
        std::invalid_argument);
    // Exactly at the bound is accepted.
    REQUIRE_NOTHROW(generate_deployment(50, r_c, r_c / std::sqrt(3.0), 0));
}

TEST_CASE("deployment determinism") {
    const Deployment a = generate_deployment(50, 0.2, 0.15, 7);
    const Deployment b = generate_deployment(50, 0.2, 0.15, 7);
    REQUIRE(a.n() == b.n());
    for (int i = 0; i < a.n(); ++i) {
        REQUIRE(a.positions[i].x == b.positions[i].x);
        REQUIRE(a.positions[i].y == b.positions[i].y);
    }
    const Deployment c = generate_deployment(50, 0.2, 0.15, 8);
    bool any_differs = false;
    for (int i = 0; i < a.n(); ++i)
        any_differs |= a.positions[i].x != c.positions[i].x;
    REQUIRE(any_differs);
}

TEST_CASE("edge at exactly r_c is included") {
    Deployment d;
    d.r_c = 0.5;
    d.r_s = 0.5;
    d.positions = {{0.25, 0.5}, {0.75, 0.5}};
    REQUIRE(build_comm_graph(d).has_edge(0, 1));

    d.positions[1].x = 0.75 + 1e-9;
    REQUIRE_FALSE(build_comm_graph(d).has_edge(0, 1));
}

TEST_CASE("wormhole adds the complete bipartite edge set") {
    Deployment d;
    d.r_c = 0.1;
    d.r_s = 0.1;
    d.positions = {{0.08, 0.10}, {0.10, 0.12}, {0.12, 0.10},   // near p1
                   {0.88, 0.90}, {0.90, 0.92}, {0.92, 0.90},
                   {0.90, 0.88}};                               // near p2
    const Deployment w = inject_wormhole(d, {0.1, 0.1}, {0.9, 0.9}, 0.05);
    auto [v1, v2] = wormhole_vicinities(w, w.faults[0]);
    REQUIRE(v1.size() == 3);
    REQUIRE(v2.size() == 4);

    const CommGraph before = build_comm_graph(d);
    const CommGraph after = build_comm_graph(w);
    std::set<std::pair<NodeId, NodeId>> added;
    for (const auto& e : after.edges())
        if (!before.has_edge(e.first, e.second)) added.insert(e);
    REQUIRE(added.size() == 12);
    for (NodeId a : v1)
        for (NodeId b : v2) REQUIRE(after.has_edge(a, b));
    // Nothing else changed.
    for (const auto& e : before.edges())
        REQUIRE(after.has_edge(e.first, e.second));
}

TEST_CASE("wormhole vicinities must be disjoint") {
    Deployment d = generate_deployment(20, 0.3, 0.3, 1);
    REQUIRE_THROWS_AS(inject_wormhole(d, {0.4, 0.4}, {0.5, 0.5}, 0.2),
                      std::invalid_argument);
}

TEST_CASE("hole disjoint from all nodes leaves positions intact") {
    const Deployment d = generate_deployment(9, 0.4, 0.4, 3, "grid");
    // Tiny disk in a gap between grid points.
    const Deployment h = inject_hole(d, {0.5, 0.33}, 0.02);
    REQUIRE(h.n() == d.n());
    REQUIRE(h.faults.size() == 1);
    REQUIRE(h.faults[0].kind == FaultRecord::Kind::CoverageHole);
}

TEST_CASE("hole removal count matches brute-force scan") {
    const Deployment d = generate_deployment(400, 0.075, 0.05, 0, "grid");
    const Point center{0.5, 0.5};
    const double radius = 0.15;  // 3 grid spacings
    int inside = 0;
    for (const Point& p : d.positions)
        if (dist(p, center) <= radius) ++inside;
    REQUIRE(inside > 0);
    const Deployment h = inject_hole(d, center, radius);
    REQUIRE(h.n() == d.n() - inside);
    REQUIRE_FALSE(h.faults[0].rim_nodes.empty());
    for (NodeId v : h.faults[0].rim_nodes) {
        const double r = dist(h.positions[v], center);
        REQUIRE(r > radius);
        REQUIRE(r <= radius + h.r_c);
    }
}

TEST_CASE("hole swallowing the network is rejected") {
    const Deployment d = generate_deployment(25, 0.3, 0.3, 5);
    REQUIRE_THROWS_AS(inject_hole(d, {0.5, 0.5}, 2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(inject_hole(d, {5.0, 5.0}, 0.5), std::invalid_argument);
}

TEST_CASE("coverage oracle on the fault-free grid") {
    const Deployment d = generate_deployment(400, 0.075, 0.05, 0, "grid");
    REQUIRE(coverage_ground_truth(d).hole_count == 0);
}

TEST_CASE("coverage oracle counts injected holes") {
    const Deployment d = generate_deployment(400, 0.075, 0.05, 0, "grid");
    const Deployment one = inject_hole(d, {0.5, 0.5}, 0.15);
    const CoverageTruth t1 = coverage_ground_truth(one);
    REQUIRE(t1.hole_count == 1);
    REQUIRE_FALSE(t1.rims[0].empty());

    const Deployment two = inject_hole(one, {0.2, 0.2}, 0.12);
    REQUIRE(coverage_ground_truth(two).hole_count == 2);
}

TEST_CASE("coverage oracle rejects coarse rasters") {
    const Deployment d = generate_deployment(25, 0.3, 0.3, 2);
    REQUIRE_THROWS_AS(coverage_ground_truth(d, d.r_s / 2.0),
                      std::invalid_argument);
}

TEST_CASE("graph symmetry on random deployments") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const CommGraph g = testing::random_disk_graph(40, 0.25, seed);
        for (NodeId u = 0; u < g.n; ++u)
            for (NodeId v : g.adj[u]) REQUIRE(g.has_edge(v, u));
    }
}

TEST_CASE("graph determinism across rebuilds") {
    const Deployment d = generate_deployment(60, 0.2, 0.15, 11);
    const CommGraph a = build_comm_graph(d);
    const CommGraph b = build_comm_graph(d);
    REQUIRE(a.edges() == b.edges());
}

TEST_CASE("clique convex hulls are covered when r_s >= r_c/sqrt(3)") {
    const double r_c = 0.3;
    const double r_s = r_c / std::sqrt(3.0);
    const Deployment d = generate_deployment(25, r_c, r_s, 7);
    const CommGraph g = build_comm_graph(d);
    const RipsComplex x = build_rips(g);
    // Sample barycentric grid points of every triangle and check coverage
    // by the clique's own sensing disks.
    for (const auto& [a, b, c] : x.triangles) {
        const Point pa = d.positions[a], pb = d.positions[b],
                    pc = d.positions[c];
        for (int i = 0; i <= 4; ++i) {
            for (int j = 0; j + i <= 4; ++j) {
                const double wa = i / 4.0, wb = j / 4.0, wc = 1.0 - wa - wb;
                const Point p{wa * pa.x + wb * pb.x + wc * pc.x,
                              wa * pa.y + wb * pb.y + wc * pc.y};
                const double cover = std::min(
                    {dist(p, pa), dist(p, pb), dist(p, pc)});
                REQUIRE(cover <= r_s + 1e-12);
            }
        }
    }
}
