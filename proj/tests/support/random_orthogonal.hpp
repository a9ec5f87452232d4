#pragma once

// Random orthogonal maps for equivariance property tests: Gram-Schmidt with
// one re-orthogonalization pass over a Gaussian matrix.

#include <stdexcept>

#include "elra/orthogonal_map.hpp"
#include "elra/rng.hpp"

namespace elra::test {

inline OrthogonalMap random_orthogonal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Vector> rows(n, Vector(n));
    for (auto& row : rows) {
        for (double& v : row) v = gaussian(gen);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < i; ++j) {
                add_scaled(rows[i], rows[j], -dot(rows[i], rows[j]));
            }
        }
        const double len = norm(rows[i]);
        if (len < 1e-8) throw std::runtime_error("random_orthogonal: degenerate draw");
        for (double& v : rows[i]) v /= len;
    }
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return OrthogonalMap(n, std::move(flat));
}

}  // namespace elra::test
