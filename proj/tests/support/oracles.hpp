#pragma once

// Test-only oracles kept independent of the library's own update paths:
// finite differences for gradients, bisection for exact line minimizers,
// and a scripted objective for step-mechanics tests.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "elra/objective.hpp"
#include "elra/vector_ops.hpp"

namespace elra::test {

inline Vector finite_difference_gradient(const std::function<double(const Vector&)>& f,
                                         Vector x, double h) {
    Vector grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double orig = x[i];
        x[i] = orig + h;
        const double fp = f(x);
        x[i] = orig - h;
        const double fm = f(x);
        x[i] = orig;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

inline Vector finite_difference_gradient(const Objective& objective, const Vector& x, double h) {
    return finite_difference_gradient(
        [&](const Vector& p) { return objective.evaluate(p).value; }, x, h);
}

/// max_i |a_i - b_i| / max(1, max_i |b_i|)
inline double gradient_relative_error(const Vector& a, const Vector& b) {
    double max_diff = 0.0;
    double max_ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
        max_ref = std::max(max_ref, std::abs(b[i]));
    }
    return max_diff / std::max(1.0, max_ref);
}

/// Slope of alpha -> f(x - alpha g), i.e. the directional derivative along -g.
inline double ray_slope(const Objective& objective, const Vector& x, const Vector& g,
                        double alpha) {
    return -dot(objective.evaluate(subtract_scaled(x, g, alpha)).gradient, g);
}

/// Exact line minimizer along -g from x found by bisection on the slope sign
/// change. Assumes the slope is negative at 0 and eventually turns positive
/// (true on any bowl away from the minimum).
inline double bisect_line_minimizer(const Objective& objective, const Vector& x, const Vector& g) {
    if (!(ray_slope(objective, x, g, 0.0) < 0.0)) {
        throw std::invalid_argument("bisect_line_minimizer: not a descent direction");
    }
    double hi = 1e-6;
    int expansions = 0;
    while (ray_slope(objective, x, g, hi) < 0.0) {
        hi *= 2.0;
        if (++expansions > 200) {
            throw std::runtime_error("bisect_line_minimizer: no bracket found");
        }
    }
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ray_slope(objective, x, g, mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Objective returning a pre-programmed (f, gradient) sequence regardless of
/// the query point; lets tests drive optimizer steps with exact gradients.
class ScriptedObjective final : public Objective {
public:
    ScriptedObjective(std::size_t dimension, std::vector<EvalResult> script)
        : dimension_(dimension), script_(std::move(script)) {}
    std::size_t dimension() const override { return dimension_; }
    EvalResult evaluate(const Vector&) const override {
        if (next_ >= script_.size()) throw std::logic_error("ScriptedObjective: script exhausted");
        return script_[next_++];
    }

private:
    std::size_t dimension_;
    std::vector<EvalResult> script_;
    mutable std::size_t next_ = 0;
};

}  // namespace elra::test
