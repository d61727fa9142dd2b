#pragma once

#include <map>

#include "ripsnet/exact.hpp"
#include "ripsnet/rips.hpp"

namespace ripsnet {

/**
 * Formal linear combination of canonical simplices of one degree, indexed
 * by their position in the owning RipsComplex. Zero coefficients are never
 * stored.
 */
struct Chain {
    int degree = 1;
    std::map<int, Rational> coeff;

    void add(int index, const Rational& c);
    bool is_zero() const { return coeff.empty(); }

    Chain operator-(const Chain& other) const;
    Chain operator+(const Chain& other) const;
};

/// Edge chain of a closed node walk: +1 for each edge traversed ascending,
/// -1 descending. Throws when a hop is not an edge of the complex.
Chain cycle_chain(const RipsComplex& x, const std::vector<NodeId>& cycle);

/// Boundary of one triangle (by index) as an edge chain.
Chain triangle_boundary(const RipsComplex& x, int triangle_index);

struct BettiNumbers {
    int b0 = 0;
    int b1 = 0;
    int rank_d1 = 0;
    int rank_d2 = 0;
    int dim_ker_d1 = 0;
};

/**
 * Exact homology oracle for one complex. Ranks and membership tests are
 * computed over the rationals, so the answers carry no numerical doubt.
 * The reduction of each boundary operator is done once and shared by all
 * queries.
 */
class ExactHomology {
  public:
    explicit ExactHomology(const RipsComplex& x);

    BettiNumbers betti() const { return betti_; }

    /// Is the chain a cycle (in ker d1)?
    bool is_cycle(const Chain& c) const;

    /// Is the cycle a boundary (in img d2)? Throws when not a cycle.
    bool is_boundary(const Chain& c) const;

    /// Are two cycles homologous (difference in img d2)?
    bool homologous(const Chain& c1, const Chain& c2) const;

  private:
    const RipsComplex& x_;
    spmat_i d1_;
    ColumnReducer d2_reduced_;
    BettiNumbers betti_;
};

/// (b0, b1) of a complex by exact rational rank computation:
/// b0 = |V| - rank d1, b1 = |E| - rank d1 - rank d2.
BettiNumbers betti_exact(const RipsComplex& x);

/// Convenience wrapper: true iff c1 - c2 lies in the column space of d2.
bool homologous_check(const Chain& c1, const Chain& c2, const RipsComplex& x);

}  // namespace ripsnet
