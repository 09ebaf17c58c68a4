#pragma once

#include <cstddef>
#include <vector>

#include "dac/geo.hpp"

namespace dac::kernels {

using Matrix = std::vector<std::vector<double>>;

// Row-major dense ops. Each kernel has a serial reference and an OpenMP
// variant parallelized over output rows; per-row arithmetic order is
// identical, so results are bitwise equal.

// Y = X * W + b, X: n x m, W: m x h, b: h.
Matrix affine_forward_serial(const Matrix& x, const Matrix& w, const std::vector<double>& b);
Matrix affine_forward_omp(const Matrix& x, const Matrix& w, const std::vector<double>& b);

// Nearest-center index per point (squared Euclidean, ties to the lowest index).
std::vector<int> assign_to_centers_serial(const Matrix& points, const Matrix& centers);
std::vector<int> assign_to_centers_omp(const Matrix& points, const Matrix& centers);

// Pairwise great-circle distances, symmetric with zero diagonal.
Matrix distance_matrix_serial(const std::vector<LatLon>& pts);
Matrix distance_matrix_omp(const std::vector<LatLon>& pts);

inline Matrix affine_forward(const Matrix& x, const Matrix& w, const std::vector<double>& b) {
    return affine_forward_omp(x, w, b);
}
inline std::vector<int> assign_to_centers(const Matrix& points, const Matrix& centers) {
    return assign_to_centers_omp(points, centers);
}
inline Matrix distance_matrix(const std::vector<LatLon>& pts) {
    return distance_matrix_omp(pts);
}

} // namespace dac::kernels
