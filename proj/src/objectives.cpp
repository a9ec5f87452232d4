#include "elra/objectives.hpp"

#include <stdexcept>
#include <utility>

namespace elra {

namespace {

void check_dim(const Vector& x, std::size_t n, const char* name) {
    if (x.size() != n) {
        throw std::invalid_argument(std::string(name) + ": expected dimension " +
                                    std::to_string(n) + ", got " + std::to_string(x.size()));
    }
}

}  // namespace

EvalResult SaddleObjective::evaluate(const Vector& x) const {
    check_dim(x, 2, "SaddleObjective");
    EvalResult r;
    r.value = x[0] * x[0] - x[1] * x[1];
    r.gradient = {2.0 * x[0], -2.0 * x[1]};
    return r;
}

BowlObjective::BowlObjective(Vector coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("BowlObjective: needs at least one coefficient");
    for (double c : coeffs_) {
        if (!(c > 0.0)) throw std::invalid_argument("BowlObjective: all coefficients must be positive");
    }
}

EvalResult BowlObjective::evaluate(const Vector& x) const {
    check_dim(x, coeffs_.size(), "BowlObjective");
    EvalResult r;
    r.gradient.resize(x.size());
    double f = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        f += coeffs_[i] * x[i] * x[i];
        r.gradient[i] = 2.0 * coeffs_[i] * x[i];
    }
    r.value = f;
    return r;
}

EvalResult RosenbrockObjective::evaluate(const Vector& x) const {
    check_dim(x, 2, "RosenbrockObjective");
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    EvalResult r;
    r.value = a * a + 100.0 * b * b;
    r.gradient = {-2.0 * a - 400.0 * x[0] * b, 200.0 * b};
    return r;
}

RotatedObjective::RotatedObjective(std::shared_ptr<const Objective> inner, OrthogonalMap map)
    : inner_(std::move(inner)), map_(std::move(map)) {
    if (!inner_) throw std::invalid_argument("RotatedObjective: inner objective is null");
    if (inner_->dimension() != map_.dimension()) {
        throw std::invalid_argument("RotatedObjective: map and objective dimensions differ");
    }
}

EvalResult RotatedObjective::evaluate(const Vector& x) const {
    check_dim(x, map_.dimension(), "RotatedObjective");
    EvalResult inner = inner_->evaluate(map_.apply(x));
    EvalResult r;
    r.value = inner.value;
    r.gradient = map_.apply_transpose(inner.gradient);
    return r;
}

}  // namespace elra
