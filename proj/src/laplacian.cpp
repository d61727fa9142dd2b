#include "ripsnet/laplacian.hpp"

#include <stdexcept>

#include "ripsnet/rng.hpp"

namespace ripsnet {

spmat_t laplacian1(const RipsComplex& x) {
    if (x.n_edges() == 0)
        throw std::invalid_argument("laplacian1: complex has no edges");
    const spmat_i d1 = boundary_matrix(1, x);
    const spmat_i d2 = boundary_matrix(2, x);
    const spmat_t d1d = d1.cast<double>();
    const spmat_t d2d = d2.cast<double>();
    spmat_t L = spmat_t(d2d * d2d.transpose()) +
                spmat_t(d1d.transpose() * d1d);
    L.makeCompressed();
    return L;
}

vec_t seeded_start_vector(int dim, std::uint64_t seed) {
    Rng rng(seed);
    vec_t v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.uniform(-1.0, 1.0);
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
    return v;
}

PowerIterationResult power_iteration(const spmat_t& m, std::uint64_t seed,
                                     int max_iters, double rel_change,
                                     double stop_above) {
    const int dim = static_cast<int>(m.rows());
    if (dim == 0) throw std::invalid_argument("power_iteration: empty matrix");
    if (max_iters <= 0) max_iters = 10 * dim;

    PowerIterationResult res;
    vec_t x = seeded_start_vector(dim, seed);
    double prev = 0.0;
    int streak = 0;
    constexpr int kStreak = 8;  // consecutive quiet iterations to accept
    for (int it = 1; it <= max_iters; ++it) {
        const vec_t y = m * x;
        const double lambda = x.dot(y);  // Rayleigh quotient, x normalized
        const double ynorm = y.norm();
        res.iterations = it;
        res.value = lambda;
        if (ynorm == 0.0) {
            // x is annihilated: spectral radius along the iterate is zero.
            res.value = 0.0;
            res.converged = true;
            res.vector = x;
            return res;
        }
        if (lambda >= stop_above) {
            res.converged = true;  // certified bound crossing
            res.vector = y / ynorm;
            return res;
        }
        if (std::abs(lambda - prev) <=
            rel_change * std::max(std::abs(lambda), 1e-30)) {
            if (++streak >= kStreak) {
                res.converged = true;
                res.vector = y / ynorm;
                return res;
            }
        } else {
            streak = 0;
        }
        prev = lambda;
        x = y / ynorm;
    }
    res.vector = x;
    return res;
}

RankDeficiencyResult rank_deficiency_test(const spmat_t& L, double tol,
                                          std::uint64_t seed, int max_iters) {
    RankDeficiencyResult out;
    const auto p1 = power_iteration(L, seed, max_iters);
    out.rho1 = p1.value;
    out.iterations = p1.iterations;
    if (!p1.converged) return out;
    if (out.rho1 <= 0.0) {
        // Zero operator: every eigenvalue vanishes.
        out.verdict = RankVerdict::Deficient;
        out.rho2 = 0.0;
        out.margin = 0.0;
        return out;
    }

    spmat_t shifted = -L;
    for (int i = 0; i < shifted.rows(); ++i)
        shifted.coeffRef(i, i) += out.rho1;
    shifted.makeCompressed();

    const auto p2 = power_iteration(shifted, seed + 1, max_iters, 1e-10,
                                    out.rho1 * (1.0 - tol));
    out.rho2 = p2.value;
    out.iterations += p2.iterations;
    if (!p2.converged) return out;

    out.margin = (out.rho1 - out.rho2) / out.rho1;
    out.verdict =
        out.margin < tol ? RankVerdict::Deficient : RankVerdict::FullRank;
    return out;
}

}  // namespace ripsnet
