#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "elra/orthogonal_map.hpp"
#include "elra/rng.hpp"
#include "elra/vector_ops.hpp"
#include "support/random_orthogonal.hpp"

using namespace elra;

TEST_CASE("dot: axis-aligned, hand-computed, and norm cases") {
    CHECK(dot({1, 0}, {0, 1}) == 0.0);
    CHECK(dot({1, 2}, {3, 4}) == 11.0);
    CHECK(dot({3, 4}, {3, 4}) == 25.0);
    CHECK_THROWS_AS(dot({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("cosine: orthogonal, parallel, and degenerate inputs") {
    CHECK(cosine({1, 0}, {0, 1}) == 0.0);
    CHECK(cosine({1, 1}, {2, 2}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cosine({0, 0}, {1, 0}) == 0.0);
    CHECK(cosine({1e-31, 0}, {1, 0}) == 0.0);  // below the degeneracy guard
}

TEST_CASE("cosine: symmetric and invariant under positive rescaling") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 50; ++trial) {
        Vector u(3), v(3);
        for (auto* w : {&u, &v}) {
            for (double& x : *w) x = uniform_range(gen, -5.0, 5.0);
        }
        const double a = uniform_range(gen, 0.1, 10.0);
        const double b = uniform_range(gen, 0.1, 10.0);
        CHECK(cosine(u, v) == doctest::Approx(cosine(v, u)).epsilon(1e-14));
        CHECK(cosine(scaled(u, a), scaled(v, b)) == doctest::Approx(cosine(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("orthogonal maps: rotation examples") {
    const auto id = OrthogonalMap::identity(2);
    const Vector x{1.0, 2.0};
    CHECK(id.apply(x) == x);

    const auto rot45 = OrthogonalMap::rotation_2d(M_PI / 4.0);
    const auto y = rot45.apply({1.0, 0.0});
    CHECK(y[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
    CHECK(y[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));

    const auto rot90 = OrthogonalMap::rotation_2d(M_PI / 2.0);
    const auto z = rot90.apply({1.0, 0.0});
    CHECK(z[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(z[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("orthogonal maps: construction validates orthogonality") {
    CHECK_THROWS_AS(OrthogonalMap(2, {1.0, 0.0, 0.0, 1.0 + 1e-6}), std::invalid_argument);
    CHECK_THROWS_AS(OrthogonalMap(2, {1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(OrthogonalMap(2, {1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("orthogonal maps: norm preservation, inverse, cosine invariance") {
    std::mt19937_64 gen(7);
    for (std::size_t dim = 2; dim <= 10; ++dim) {
        const auto q = test::random_orthogonal(dim, split_seed(7, dim));
        Vector u(dim), v(dim);
        for (auto* w : {&u, &v}) {
            for (double& x : *w) x = uniform_range(gen, -3.0, 3.0);
        }
        CHECK(norm(q.apply(u)) == doctest::Approx(norm(u)).epsilon(1e-12));
        const auto round_trip = q.apply_transpose(q.apply(u));
        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(round_trip[i] == doctest::Approx(u[i]).epsilon(1e-12));
        }
        CHECK(cosine(q.apply(u), q.apply(v)) == doctest::Approx(cosine(u, v)).epsilon(1e-12));
    }
}
