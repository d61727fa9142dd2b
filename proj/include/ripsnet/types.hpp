#pragma once

#include <cstdint>
#include <vector>
#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ripsnet {

/// Node identifier; ids are dense 0..n-1 within a deployment and supply the
/// total order used for every tie-break in the protocols.
using NodeId = int;

using vec_t = Eigen::VectorXd;
using mat_t = Eigen::MatrixXd;
using spmat_t = Eigen::SparseMatrix<double>;
using spmat_i = Eigen::SparseMatrix<int>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace ripsnet
