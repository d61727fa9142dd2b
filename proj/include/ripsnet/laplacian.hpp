#pragma once

#include <limits>

#include "ripsnet/rips.hpp"

namespace ripsnet {

/// First combinatorial Laplacian L1 = d2 d2^T + d1^T d1 over edge index
/// space. Symmetric and non-negative definite by construction.
/// Throws when the complex has no edges.
spmat_t laplacian1(const RipsComplex& x);

struct PowerIterationResult {
    double value = 0.0;     // spectral radius estimate
    int iterations = 0;
    bool converged = false;
    vec_t vector;           // final normalized iterate
};

/// Normalized deterministic start vector shared by the centralized and
/// the message-passing power iterations.
vec_t seeded_start_vector(int dim, std::uint64_t seed);

/**
 * Power iteration with a deterministic seeded start vector. The Rayleigh
 * quotient is accepted once its relative change stays below `rel_change`
 * for a short streak of iterations; `max_iters <= 0` means the 10*dim
 * default. Non-convergence is reported, never silently truncated.
 *
 * `stop_above`: the Rayleigh quotient is a certified lower bound on the
 * top eigenvalue, so crossing this threshold ends the run early with a
 * converged result. The deficiency test uses it to cut short the shifted
 * iteration once a zero eigenvalue is already proven at tolerance.
 */
PowerIterationResult power_iteration(
    const spmat_t& m, std::uint64_t seed = 12345, int max_iters = 0,
    double rel_change = 1e-10,
    double stop_above = std::numeric_limits<double>::infinity());

enum class RankVerdict { Deficient, FullRank, Inconclusive };

struct RankDeficiencyResult {
    RankVerdict verdict = RankVerdict::Inconclusive;
    double rho1 = 0.0;    // spectral radius of L
    double rho2 = 0.0;    // spectral radius of rho1*I - L
    double margin = 0.0;  // (rho1 - rho2) / rho1, an estimate of lmin/rho1
    int iterations = 0;
};

/**
 * Spectral test for a zero eigenvalue: L is rank deficient iff
 * rho(rho(L) I - L) = rho(L), decided at a relative tolerance. Two power
 * iterations supply the two radii; hitting the iteration cap yields an
 * explicit Inconclusive verdict.
 */
RankDeficiencyResult rank_deficiency_test(const spmat_t& L, double tol = 1e-6,
                                          std::uint64_t seed = 12345,
                                          int max_iters = 0);

}  // namespace ripsnet
