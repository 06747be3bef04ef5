#pragma once

#include <Eigen/Dense>
#include <vector>

namespace labelcap {

// Strongly connected components of the nonzero pattern of a square matrix,
// in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(const Eigen::MatrixXi& adjacency);

// Perron eigenvalue of a nonnegative integer matrix: the maximum over its
// strongly connected components of each component's spectral radius.
//
// Per component the primary method is power iteration on (A + I) with
// Collatz-Wielandt bounds (the shift makes the dominant eigenvalue strict
// even for periodic components); if the bounds fail to close, a sign-scan
// plus bisection on det(xI - A) takes over. An empty matrix yields 0.
double spectral_radius(const Eigen::MatrixXi& adjacency, double tol = 1e-12);

// The bisection fallback on its own: largest real root of det(xI - A),
// located by a descending sign scan. Requires an irreducible nonnegative
// matrix, whose Perron root is a simple real root with det positive above.
double perron_root_by_determinant(const Eigen::MatrixXd& irreducible, double tol = 1e-12);

}  // namespace labelcap
