#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "elra/objectives.hpp"
#include "elra/rng.hpp"
#include "support/oracles.hpp"

using namespace elra;

TEST_CASE("saddle: value and gradient at the canonical start") {
    SaddleObjective saddle;
    const auto r = saddle.evaluate({1.0, 1e-9});
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));  // 1 - 1e-18
    CHECK(r.gradient[0] == 2.0);
    CHECK(r.gradient[1] == -2e-9);
    CHECK_THROWS_AS(saddle.evaluate({1.0}), std::invalid_argument);
}

TEST_CASE("rosenbrock: global minimum and hand-differentiated gradient") {
    RosenbrockObjective rosen;
    const auto at_min = rosen.evaluate({1.0, 1.0});
    CHECK(at_min.value == 0.0);
    CHECK(at_min.gradient[0] == 0.0);
    CHECK(at_min.gradient[1] == 0.0);

    const auto r = rosen.evaluate({-3.0, -2.0});
    CHECK(r.gradient[0] == -13208.0);
    CHECK(r.gradient[1] == -2200.0);
}

TEST_CASE("bowl: value at the table start point, exact gradient form") {
    BowlObjective bowl({3.0, 24.0});
    const auto r = bowl.evaluate({-5.75, 1.75});
    CHECK(r.value == doctest::Approx(172.6875).epsilon(1e-15));
    CHECK(r.gradient[0] == 2.0 * 3.0 * -5.75);
    CHECK(r.gradient[1] == 2.0 * 24.0 * 1.75);

    CHECK_THROWS_AS(BowlObjective({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(BowlObjective(Vector{}), std::invalid_argument);
}

TEST_CASE("rotated objective: exact composition and transposed gradient") {
    auto bowl = std::make_shared<BowlObjective>(Vector{3.0, 24.0});
    const auto q = OrthogonalMap::rotation_2d(M_PI / 4.0);
    RotatedObjective rotated(bowl, q);

    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        Vector y{uniform_range(gen, -5, 5), uniform_range(gen, -5, 5)};
        // f_rot(Q^T y) is computed as f_inner(Q Q^T y); evaluating through the
        // wrapper must agree exactly with hand-composing the same calls.
        const Vector z = q.apply_transpose(y);
        CHECK(rotated.evaluate(z).value == bowl->evaluate(q.apply(z)).value);
    }
}

TEST_CASE("all objectives match central finite differences") {
    std::mt19937_64 gen(11);
    const double h = 1e-6;

    auto check_at_random_points = [&](const Objective& obj, double lo, double hi) {
        for (int trial = 0; trial < 100; ++trial) {
            Vector x(obj.dimension());
            for (double& v : x) v = uniform_range(gen, lo, hi);
            const auto analytic = obj.evaluate(x).gradient;
            const auto fd = test::finite_difference_gradient(obj, x, h);
            CHECK(test::gradient_relative_error(fd, analytic) < 1e-5);
        }
    };

    check_at_random_points(SaddleObjective{}, -10.0, 10.0);
    check_at_random_points(RosenbrockObjective{}, -10.0, 10.0);
    BowlObjective bowl({0.5, 3.0, 24.0});
    check_at_random_points(bowl, -10.0, 10.0);
    RotatedObjective rotated(std::make_shared<BowlObjective>(Vector{3.0, 24.0}),
                             OrthogonalMap::rotation_2d(M_PI / 4.0));
    check_at_random_points(rotated, -10.0, 10.0);
}
