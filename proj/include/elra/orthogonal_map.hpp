#pragma once

#include <cstddef>
#include <vector>

#include "elra/vector_ops.hpp"

namespace elra {

/// Dense orthogonal matrix. Orthogonality (Q^T Q = I to 1e-12 per entry)
/// is validated eagerly at construction so invariance experiments cannot
/// run on a silently corrupted map.
class OrthogonalMap {
public:
    OrthogonalMap(std::size_t n, std::vector<double> row_major);

    static OrthogonalMap identity(std::size_t n);
    /// 2-D counter-clockwise rotation by the given angle in radians.
    static OrthogonalMap rotation_2d(double angle_radians);

    std::size_t dimension() const { return n_; }
    double entry(std::size_t row, std::size_t col) const { return m_[row * n_ + col]; }

    Vector apply(const Vector& x) const;            // Q x
    Vector apply_transpose(const Vector& x) const;  // Q^T x

private:
    std::size_t n_;
    std::vector<double> m_;  // row-major
};

}  // namespace elra
