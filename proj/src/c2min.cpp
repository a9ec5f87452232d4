#include "elra/c2min.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace elra {

C2MinState make_c2min_state(Vector x0, double alpha0) {
    if (!all_finite(x0)) throw std::invalid_argument("make_c2min_state: non-finite start point");
    if (!(alpha0 > 0.0)) throw std::invalid_argument("make_c2min_state: alpha0 must be positive");
    C2MinState s;
    s.momentum.assign(x0.size(), 0.0);
    s.x = std::move(x0);
    s.alpha = alpha0;
    return s;
}

std::optional<StepRecord> c2min_step(C2MinState& state, const Objective& objective,
                                     const AlphaBounds& bounds) {
    EvalResult eval = objective.evaluate(state.x);
    if (!std::isfinite(eval.value) || !all_finite(eval.gradient)) return std::nullopt;

    const bool first = !state.grad_prev.has_value();
    const double cos_t = first ? 0.0 : cosine(eval.gradient, *state.grad_prev);
    const double alpha = bounds.clamp(alpha_update_linear(state.alpha, cos_t));

    Vector momentum = state.momentum;
    if (first) {
        momentum = scaled(eval.gradient, 1.0 - state.beta1);
    } else {
        for (std::size_t i = 0; i < momentum.size(); ++i) {
            momentum[i] = state.beta1 * momentum[i] +
                          (1.0 - state.beta1) * 0.5 * (eval.gradient[i] + (*state.grad_prev)[i]);
        }
    }

    Vector x_new(state.x.size());
    if (first) {
        x_new = subtract_scaled(state.x, eval.gradient, alpha);
    } else {
        for (std::size_t i = 0; i < x_new.size(); ++i) {
            const double direction =
                (1.0 - state.beta2) * eval.gradient[i] + state.beta2 * momentum[i];
            x_new[i] = state.x[i] - alpha * direction;
        }
    }
    if (!all_finite(x_new)) return std::nullopt;

    StepRecord rec;
    rec.t = state.step_count;
    rec.f = eval.value;
    rec.alpha = alpha;
    rec.cos_t = cos_t;

    state.x = std::move(x_new);
    state.alpha = alpha;
    state.momentum = std::move(momentum);
    state.grad_prev = std::move(eval.gradient);
    ++state.step_count;
    return rec;
}

}  // namespace elra
