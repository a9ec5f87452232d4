#include "elra/orthogonal_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elra {

OrthogonalMap::OrthogonalMap(std::size_t n, std::vector<double> row_major)
    : n_(n), m_(std::move(row_major)) {
    if (n_ == 0 || m_.size() != n_ * n_) {
        throw std::invalid_argument("OrthogonalMap: matrix size does not match dimension");
    }
    // Q^T Q must equal the identity within 1e-12 per entry.
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n_; ++k) s += m_[k * n_ + i] * m_[k * n_ + j];
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expected) > 1e-12) {
                throw std::invalid_argument("OrthogonalMap: matrix is not orthogonal (entry (" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            ") of Q^T Q off by " + std::to_string(s - expected) + ")");
            }
        }
    }
}

OrthogonalMap OrthogonalMap::identity(std::size_t n) {
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
    return OrthogonalMap(n, std::move(m));
}

OrthogonalMap OrthogonalMap::rotation_2d(double angle_radians) {
    const double c = std::cos(angle_radians);
    const double s = std::sin(angle_radians);
    return OrthogonalMap(2, {c, -s, s, c});
}

Vector OrthogonalMap::apply(const Vector& x) const {
    if (x.size() != n_) throw std::invalid_argument("OrthogonalMap::apply: dimension mismatch");
    Vector y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += m_[i * n_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

Vector OrthogonalMap::apply_transpose(const Vector& x) const {
    if (x.size() != n_) throw std::invalid_argument("OrthogonalMap::apply_transpose: dimension mismatch");
    Vector y(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += m_[i * n_ + j] * x[i];
        y[j] = s;
    }
    return y;
}

}  // namespace elra
