#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>
#include <vector>

#include "ripsnet/types.hpp"

namespace ripsnet {

/// Exact coefficient field for the homology oracle.
using Rational = boost::multiprecision::cpp_rational;

/// Sparse column over the rationals: (row, coefficient) sorted by row,
/// zero coefficients absent.
using QColumn = std::vector<std::pair<int, Rational>>;

/// a + s * b, merging sorted entries and dropping cancellations.
QColumn column_axpy(const QColumn& a, const Rational& s, const QColumn& b);

/**
 * Incremental exact column reduction, the standard boundary-reduction
 * scheme: each incoming column is eliminated against the stored pivot
 * columns (matching on the largest remaining row index) until it either
 * vanishes or contributes a fresh pivot. Rank queries and column-space
 * membership both fall out of the pivot table.
 */
class ColumnReducer {
  public:
    /// Reduce a column; returns true when it survived (rank grew by one).
    bool add_column(QColumn col);

    /// Reduce a vector against the current pivots without storing it;
    /// returns true when it lies in the span of the added columns.
    bool in_span(QColumn col) const;

    int rank() const { return static_cast<int>(columns_.size()); }

  private:
    QColumn reduce(QColumn col) const;

    std::vector<QColumn> columns_;          // surviving reduced columns
    std::unordered_map<int, int> pivot_;    // low row -> column index
};

/// Exact rank of a sparse integer matrix over the rationals.
int exact_rank(const spmat_i& m);

}  // namespace ripsnet
