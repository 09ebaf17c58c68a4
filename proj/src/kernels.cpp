#include "dac/kernels.hpp"

#include <limits>
#include <stdexcept>

namespace dac::kernels {

namespace {

void affine_row(const Matrix& x, const Matrix& w, const std::vector<double>& b,
                std::size_t i, std::vector<double>& out) {
    const std::size_t m = w.size(), h = b.size();
    for (std::size_t j = 0; j < h; ++j) {
        double acc = b[j];
        for (std::size_t k = 0; k < m; ++k) acc += x[i][k] * w[k][j];
        out[j] = acc;
    }
}

int nearest_center(const Matrix& points, const Matrix& centers, std::size_t i) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
        double d = 0.0;
        for (std::size_t k = 0; k < points[i].size(); ++k) {
            const double diff = points[i][k] - centers[c][k];
            d += diff * diff;
        }
        if (d < best_d) { best_d = d; best = static_cast<int>(c); }
    }
    return best;
}

} // namespace

Matrix affine_forward_serial(const Matrix& x, const Matrix& w, const std::vector<double>& b) {
    if (!x.empty() && x[0].size() != w.size())
        throw std::invalid_argument("affine_forward: shape mismatch");
    Matrix y(x.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < x.size(); ++i) affine_row(x, w, b, i, y[i]);
    return y;
}

Matrix affine_forward_omp(const Matrix& x, const Matrix& w, const std::vector<double>& b) {
    if (!x.empty() && x[0].size() != w.size())
        throw std::invalid_argument("affine_forward: shape mismatch");
    Matrix y(x.size(), std::vector<double>(b.size()));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) affine_row(x, w, b, static_cast<std::size_t>(i), y[i]);
    return y;
}

std::vector<int> assign_to_centers_serial(const Matrix& points, const Matrix& centers) {
    if (centers.empty()) throw std::invalid_argument("assign_to_centers: no centers");
    std::vector<int> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = nearest_center(points, centers, i);
    return out;
}

std::vector<int> assign_to_centers_omp(const Matrix& points, const Matrix& centers) {
    if (centers.empty()) throw std::invalid_argument("assign_to_centers: no centers");
    std::vector<int> out(points.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[i] = nearest_center(points, centers, static_cast<std::size_t>(i));
    return out;
}

Matrix distance_matrix_serial(const std::vector<LatLon>& pts) {
    const std::size_t n = pts.size();
    Matrix d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) d[i][j] = great_circle_nm(pts[i], pts[j]);
    return d;
}

Matrix distance_matrix_omp(const std::vector<LatLon>& pts) {
    const std::size_t n = pts.size();
    Matrix d(n, std::vector<double>(n, 0.0));
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<std::size_t>(i) != j)
                d[i][j] = great_circle_nm(pts[i], pts[j]);
    return d;
}

} // namespace dac::kernels
