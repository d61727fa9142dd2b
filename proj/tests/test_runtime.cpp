#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ripsnet/graph_ops.hpp"
#include "ripsnet/laplacian.hpp"
#include "ripsnet/protocols.hpp"
#include "test_util.hpp"

using namespace ripsnet;
using ripsnet::testing::make_graph;

namespace {

/// Largest connected component of a random disk graph; the partitions the
/// protocols run on are always connected.
std::pair<CommGraph, std::vector<NodeId>> random_partition(int n, double r_c,
                                                           std::uint64_t seed) {
    CommGraph g = testing::random_disk_graph(n, r_c, seed);
    auto comps = connected_components(g);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;
    return {std::move(g), comps[best]};
}

}  // namespace

TEST_CASE("eccentricity on a path") {
    const CommGraph g = make_graph(4, {{1, 2}, {2, 3}});
    const auto res = run_eccentricity(g, {1, 2, 3});
    REQUIRE(res.f.at(1) == 2);
    REQUIRE(res.f.at(2) == 1);
    REQUIRE(res.f.at(3) == 2);
}

TEST_CASE("eccentricity on the square cycle") {
    const CommGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto res = run_eccentricity(g, {0, 1, 2, 3});
    for (NodeId v = 0; v < 4; ++v) REQUIRE(res.f.at(v) == 2);
}

TEST_CASE("eccentricity rejects disconnected partitions") {
    const CommGraph g = make_graph(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(run_eccentricity(g, {0, 1, 2, 3}),
                      std::invalid_argument);
}

TEST_CASE("eccentricity equals the BFS oracle and costs one word per node "
          "per partition member") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto [g, part] = random_partition(60, 0.22, seed);
        const auto res = run_eccentricity(g, part);
        const long m = static_cast<long>(part.size());
        for (NodeId v : part) {
            const auto d = bfs_distances(g, v, part);
            int ecc = 0;
            for (NodeId u : part) ecc = std::max(ecc, d[u]);
            REQUIRE(res.f.at(v) == ecc);
            // Theorem check: each discovery broadcast exactly once.
            REQUIRE(res.trace.words_broadcast.at(v) == m);
        }
    }
}

TEST_CASE("two-round retention equals unbounded retention") {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        auto [g, part] = random_partition(80, 0.2, seed);
        const auto bounded = run_eccentricity(g, part, 2);
        const auto unbounded =
            run_eccentricity(g, part, kUnboundedRetention);
        REQUIRE(bounded.f == unbounded.f);
        REQUIRE(bounded.trace.words_broadcast ==
                unbounded.trace.words_broadcast);
        REQUIRE(bounded.trace.rounds == unbounded.trace.rounds);
    }
}

TEST_CASE("eccentricity peak table stays near sqrt(n) on disk deployments") {
    // Constant-density scaling (r_c ~ 1/sqrt(n)): the two live BFS annuli
    // hold O(sqrt(n)) discoveries.
    for (const int n : {100, 200, 400, 800}) {
        const double r_c = 1.2 / std::sqrt(double(n));
        const Deployment d = generate_deployment(n, r_c, r_c, 42, "disk");
        CommGraph g = build_comm_graph(d);
        auto comps = connected_components(g);
        std::size_t best = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[best].size()) best = i;
        const auto res = run_eccentricity(g, comps[best]);
        const double c = static_cast<double>(res.trace.peak_words()) /
                         std::sqrt(double(comps[best].size()));
        INFO("n=" << n << " peak=" << res.trace.peak_words() << " c=" << c);
        CHECK(c < 12.0);
    }
}

TEST_CASE("max consensus with equal values stays silent after init") {
    const CommGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::map<NodeId, double> init{{0, 3.0}, {1, 3.0}, {2, 3.0}, {3, 3.0}};
    const auto res = max_consensus(g, {0, 1, 2, 3}, init);
    REQUIRE(res.trace.total_words() == 4 * 2);  // the init broadcasts only
    for (NodeId v = 0; v < 4; ++v) REQUIRE(res.value.at(v) == 3.0);
}

TEST_CASE("max consensus on a path converges to the maximum") {
    const CommGraph g = make_graph(4, {{1, 2}, {2, 3}});
    std::map<NodeId, double> init{{1, 5.0}, {2, 1.0}, {3, 9.0}};
    const auto res = max_consensus(g, {1, 2, 3}, init);
    for (NodeId v : {1, 2, 3}) {
        REQUIRE(res.value.at(v) == 9.0);
        REQUIRE(res.witness.at(v) == 3);
    }
    REQUIRE(res.trace.rounds <= 3);
}

TEST_CASE("max consensus ties carry the smallest witness") {
    const CommGraph g = make_graph(3, {{0, 1}, {1, 2}});
    std::map<NodeId, double> init{{0, 7.0}, {1, 2.0}, {2, 7.0}};
    const auto res = max_consensus(g, {0, 1, 2}, init);
    REQUIRE(res.value.at(1) == 7.0);
    REQUIRE(res.witness.at(1) == 0);
}

TEST_CASE("flood arrival rounds are hop distances") {
    const CommGraph g = make_graph(4, {{1, 2}, {2, 3}});
    const auto res = flood_from(g, {1, 2, 3}, {1});
    REQUIRE(res.received.at(1).at(1) == 0);
    REQUIRE(res.received.at(2).at(1) == 1);
    REQUIRE(res.received.at(3).at(1) == 2);
}

TEST_CASE("dual flood meets in the middle of a path") {
    const CommGraph g = make_graph(5, {{1, 2}, {2, 3}, {3, 4}});
    const auto res = flood_from(g, {1, 2, 3, 4}, {1, 4});
    for (NodeId v : {2, 3}) {
        const auto& heard = res.received.at(v);
        REQUIRE(heard.count(1) == 1);
        REQUIRE(heard.count(4) == 1);
        REQUIRE(std::abs(heard.at(1) - heard.at(4)) <= 1);
    }
}

TEST_CASE("flood with every node a source arrives immediately") {
    const CommGraph g = make_graph(3, {{0, 1}, {1, 2}});
    const auto res = flood_from(g, {0, 1, 2}, {0, 1, 2});
    for (NodeId v = 0; v < 3; ++v) REQUIRE(res.first_arrival.at(v) == 0);
}

TEST_CASE("flood requires sources") {
    const CommGraph g = make_graph(2, {{0, 1}});
    REQUIRE_THROWS_AS(flood_from(g, {0, 1}, {}), std::invalid_argument);
}

TEST_CASE("distributed power iteration on known spectra") {
    const CommGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const RipsComplex x = build_rips(c4);
    const auto res = distributed_power_iteration(c4, {0, 1, 2, 3}, x,
                                                 laplacian1(x), 5, 100000);
    REQUIRE(res.converged);
    REQUIRE(res.value == Catch::Approx(4.0).epsilon(1e-6));

    const CommGraph one = make_graph(2, {{0, 1}});
    const RipsComplex x1 = build_rips(one);
    const auto r1 =
        distributed_power_iteration(one, {0, 1}, x1, laplacian1(x1), 5);
    REQUIRE(r1.converged);
    REQUIRE(r1.value == Catch::Approx(2.0));
}

TEST_CASE("distributed power iteration matches the centralized path") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 20 && checked < 8; ++seed) {
        auto [g, part] = random_partition(14, 0.35, seed);
        const RipsComplex x = build_rips(g, part);
        if (x.n_edges() < 6) continue;
        const spmat_t L = laplacian1(x);
        const auto dist_res =
            distributed_power_iteration(g, part, x, L, 1000 + seed, 50000);
        REQUIRE(dist_res.converged);
        // Same seed, same iteration count, no early exit: the two paths
        // may only differ by floating-point association.
        const auto central =
            power_iteration(L, 1000 + seed, dist_res.iterations, -1.0);
        REQUIRE(std::abs(dist_res.value - central.value) <=
                1e-9 * std::max(1.0, std::abs(central.value)));
        ++checked;
    }
    REQUIRE(checked >= 5);
}

TEST_CASE("protocol runs are deterministic") {
    auto [g, part] = random_partition(50, 0.25, 3);
    const auto a = run_eccentricity(g, part);
    const auto b = run_eccentricity(g, part);
    REQUIRE(a.f == b.f);
    REQUIRE(a.trace.words_broadcast == b.trace.words_broadcast);
    REQUIRE(a.trace.peak_table_words == b.trace.peak_table_words);
    REQUIRE(a.trace.rounds == b.trace.rounds);
}
