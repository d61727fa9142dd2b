#include "ripsnet/deploy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "ripsnet/rng.hpp"

namespace ripsnet {

bool CommGraph::has_edge(NodeId a, NodeId b) const {
    if (a < 0 || a >= n || b < 0 || b >= n) return false;
    const auto& na = adj[a];
    return std::binary_search(na.begin(), na.end(), b);
}

void CommGraph::add_edge(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("self-loop");
    if (has_edge(a, b)) return;
    adj[a].insert(std::upper_bound(adj[a].begin(), adj[a].end(), b), b);
    adj[b].insert(std::upper_bound(adj[b].begin(), adj[b].end(), a), a);
}

std::size_t CommGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& na : adj) deg += na.size();
    return deg / 2;
}

std::vector<std::pair<NodeId, NodeId>> CommGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

constexpr double kRadiusSlack = 1e-12;

void check_radii(double r_c, double r_s) {
    if (r_c <= 0.0 || r_s <= 0.0)
        throw std::invalid_argument("radii must be positive");
    if (r_s * std::sqrt(3.0) + kRadiusSlack < r_c)
        throw std::invalid_argument(
            "sensing radius too small: require r_s >= r_c / sqrt(3)");
}

std::vector<Point> sample_positions(int n, std::uint64_t seed,
                                    const std::string& sampler) {
    Rng rng(seed);
    std::vector<Point> pos;
    pos.reserve(n);
    if (sampler == "uniform") {
        for (int i = 0; i < n; ++i) {
            const double x = rng.uniform();
            const double y = rng.uniform();
            pos.push_back({x, y});
        }
    } else if (sampler == "disk") {
        // Uniform in the inscribed disk, by rejection.
        while (static_cast<int>(pos.size()) < n) {
            const double x = rng.uniform();
            const double y = rng.uniform();
            if ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5) <= 0.25)
                pos.push_back({x, y});
        }
    } else if (sampler == "clustered") {
        const int k = std::max(2, n / 25);
        std::vector<Point> centers;
        for (int c = 0; c < k; ++c)
            centers.push_back({rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8)});
        const double sigma = 0.08;
        for (int i = 0; i < n; ++i) {
            const Point& c = centers[rng.below(k)];
            Point p;
            int tries = 0;
            do {
                p.x = c.x + sigma * rng.gaussian();
                p.y = c.y + sigma * rng.gaussian();
            } while ((p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0) &&
                     ++tries < 64);
            p.x = std::clamp(p.x, 0.0, 1.0);
            p.y = std::clamp(p.y, 0.0, 1.0);
            pos.push_back(p);
        }
    } else if (sampler == "grid") {
        const int side = static_cast<int>(std::lround(std::sqrt(double(n))));
        if (side * side != n)
            throw std::invalid_argument(
                "grid sampler requires n to be a perfect square");
        const double s = 1.0 / side;
        for (int j = 0; j < side; ++j)
            for (int i = 0; i < side; ++i)
                pos.push_back({(i + 0.5) * s, (j + 0.5) * s});
    } else {
        throw std::invalid_argument("unknown sampler: " + sampler);
    }
    return pos;
}

}  // namespace

Deployment generate_deployment(int n, double r_c, double r_s,
                               std::uint64_t seed,
                               const std::string& sampler) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    check_radii(r_c, r_s);
    Deployment d;
    d.positions = sample_positions(n, seed, sampler);
    d.r_c = r_c;
    d.r_s = r_s;
    d.seed = seed;
    d.sampler = sampler;
    return d;
}

CommGraph build_comm_graph(const Deployment& d) {
    const int n = d.n();
    CommGraph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (dist(d.positions[i], d.positions[j]) <= d.r_c)
                g.add_edge(i, j);
    for (const FaultRecord& f : d.faults) {
        if (f.kind != FaultRecord::Kind::Wormhole) continue;
        auto [v1, v2] = wormhole_vicinities(d, f);
        for (NodeId a : v1)
            for (NodeId b : v2) g.add_edge(a, b);
    }
    return g;
}

std::pair<std::vector<NodeId>, std::vector<NodeId>>
wormhole_vicinities(const Deployment& d, const FaultRecord& f) {
    std::vector<NodeId> v1, v2;
    for (NodeId i = 0; i < d.n(); ++i) {
        if (dist(d.positions[i], f.p1) <= f.r_w) v1.push_back(i);
        if (dist(d.positions[i], f.p2) <= f.r_w) v2.push_back(i);
    }
    return {v1, v2};
}

Deployment inject_hole(const Deployment& d, Point center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("hole radius must be positive");
    const double cx = std::clamp(center.x, 0.0, 1.0);
    const double cy = std::clamp(center.y, 0.0, 1.0);
    if (dist({cx, cy}, center) >= radius)
        throw std::invalid_argument("hole disk does not reach the region interior");

    Deployment out = d;
    out.positions.clear();
    for (const Point& p : d.positions)
        if (dist(p, center) > radius) out.positions.push_back(p);
    if (out.positions.empty())
        throw std::invalid_argument("hole swallows the entire network");

    FaultRecord rec;
    rec.kind = FaultRecord::Kind::CoverageHole;
    rec.center = center;
    rec.radius = radius;
    for (NodeId i = 0; i < out.n(); ++i)
        if (dist(out.positions[i], center) <= radius + d.r_c)
            rec.rim_nodes.push_back(i);
    out.faults.push_back(std::move(rec));
    return out;
}

Deployment inject_wormhole(const Deployment& d, Point p1, Point p2,
                           double r_w) {
    if (r_w <= 0.0) throw std::invalid_argument("vicinity radius must be positive");
    if (dist(p1, p2) <= 2.0 * r_w)
        throw std::invalid_argument("wormhole vicinity disks must be disjoint");
    Deployment out = d;
    FaultRecord rec;
    rec.kind = FaultRecord::Kind::Wormhole;
    rec.p1 = p1;
    rec.p2 = p2;
    rec.r_w = r_w;
    out.faults.push_back(std::move(rec));
    return out;
}

CoverageTruth coverage_ground_truth(const Deployment& d, double cell) {
    if (cell <= 0.0) cell = d.r_s / 8.0;
    if (cell > d.r_s / 4.0)
        throw std::invalid_argument("raster cell too coarse: require cell <= r_s / 4");

    const int m = std::max(2, static_cast<int>(std::ceil(1.0 / cell)));
    const double step = 1.0 / m;
    auto covered = [&](int ix, int iy) {
        const Point c{(ix + 0.5) * step, (iy + 0.5) * step};
        for (const Point& p : d.positions)
            if (dist(p, c) <= d.r_s) return true;
        return false;
    };

    // 0 = covered, 1 = uncovered, 2 = uncovered and reaches the border.
    std::vector<std::uint8_t> grid(static_cast<std::size_t>(m) * m, 0);
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix < m; ++ix)
            if (!covered(ix, iy)) grid[iy * m + ix] = 1;

    CoverageTruth truth;
    std::vector<int> component(static_cast<std::size_t>(m) * m, -1);
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    int next = 0;
    for (int iy = 0; iy < m; ++iy) {
        for (int ix = 0; ix < m; ++ix) {
            const int at = iy * m + ix;
            if (grid[at] != 1 || component[at] >= 0) continue;
            // Flood one uncovered component, tracking border contact.
            std::vector<std::pair<int, int>> cells;
            bool touches_border = false;
            std::queue<std::pair<int, int>> q;
            q.push({ix, iy});
            component[at] = next;
            while (!q.empty()) {
                auto [x, y] = q.front();
                q.pop();
                cells.push_back({x, y});
                if (x == 0 || y == 0 || x == m - 1 || y == m - 1)
                    touches_border = true;
                for (int k = 0; k < 4; ++k) {
                    const int nx = x + dx[k], ny = y + dy[k];
                    if (nx < 0 || ny < 0 || nx >= m || ny >= m) continue;
                    const int nat = ny * m + nx;
                    if (grid[nat] == 1 && component[nat] < 0) {
                        component[nat] = next;
                        q.push({nx, ny});
                    }
                }
            }
            ++next;
            if (touches_border) continue;  // outer face, not a hole
            ++truth.hole_count;
            // Nodes whose sensing disks bound this component.
            std::vector<NodeId> rim;
            const double reach = d.r_s + step * M_SQRT2;
            for (NodeId i = 0; i < d.n(); ++i) {
                for (auto [x, y] : cells) {
                    const Point c{(x + 0.5) * step, (y + 0.5) * step};
                    if (dist(d.positions[i], c) <= reach) {
                        rim.push_back(i);
                        break;
                    }
                }
            }
            truth.rims.push_back(std::move(rim));
        }
    }
    return truth;
}

}  // namespace ripsnet
