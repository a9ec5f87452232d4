#include "elra/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace elra {

void BaselineConfig::validate() const {
    if (kind != BaselineKind::adadelta && !(alpha > 0.0)) {
        throw std::invalid_argument("BaselineConfig: alpha must be positive");
    }
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
        throw std::invalid_argument("BaselineConfig: betas must lie in [0, 1)");
    }
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::invalid_argument("BaselineConfig: rho must lie in [0, 1)");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("BaselineConfig: epsilon must be positive");
    }
}

BaselineState make_baseline_state(Vector x0) {
    if (!all_finite(x0)) throw std::invalid_argument("make_baseline_state: non-finite start point");
    BaselineState s;
    const std::size_t n = x0.size();
    s.m.assign(n, 0.0);
    s.v.assign(n, 0.0);
    s.acc_update.assign(n, 0.0);
    s.x = std::move(x0);
    return s;
}

std::optional<StepRecord> baseline_step(BaselineState& state, const Objective& objective,
                                        const BaselineConfig& config) {
    EvalResult eval = objective.evaluate(state.x);
    if (!std::isfinite(eval.value) || !all_finite(eval.gradient)) return std::nullopt;

    const Vector& g = eval.gradient;
    const std::size_t n = g.size();
    Vector x_new(n);
    Vector m_new = state.m;
    Vector v_new = state.v;
    Vector acc_new = state.acc_update;
    const long t = state.step_count + 1;

    switch (config.kind) {
        case BaselineKind::sgd:
            for (std::size_t i = 0; i < n; ++i) x_new[i] = state.x[i] - config.alpha * g[i];
            break;
        case BaselineKind::adam: {
            const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(t));
            const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(t));
            for (std::size_t i = 0; i < n; ++i) {
                m_new[i] = config.beta1 * m_new[i] + (1.0 - config.beta1) * g[i];
                v_new[i] = config.beta2 * v_new[i] + (1.0 - config.beta2) * g[i] * g[i];
                const double m_hat = m_new[i] / bc1;
                const double v_hat = v_new[i] / bc2;
                x_new[i] = state.x[i] - config.alpha * m_hat / (std::sqrt(v_hat) + config.epsilon);
            }
            break;
        }
        case BaselineKind::rmsprop:
            for (std::size_t i = 0; i < n; ++i) {
                v_new[i] = config.beta2 * v_new[i] + (1.0 - config.beta2) * g[i] * g[i];
                x_new[i] = state.x[i] - config.alpha * g[i] / (std::sqrt(v_new[i]) + config.epsilon);
            }
            break;
        case BaselineKind::adadelta:
            for (std::size_t i = 0; i < n; ++i) {
                v_new[i] = config.rho * v_new[i] + (1.0 - config.rho) * g[i] * g[i];
                const double update = -std::sqrt(acc_new[i] + config.epsilon) /
                                      std::sqrt(v_new[i] + config.epsilon) * g[i];
                acc_new[i] = config.rho * acc_new[i] + (1.0 - config.rho) * update * update;
                x_new[i] = state.x[i] + update;
            }
            break;
    }
    if (!all_finite(x_new)) return std::nullopt;

    StepRecord rec;
    rec.t = state.step_count;
    rec.f = eval.value;
    rec.alpha = config.kind == BaselineKind::adadelta ? 0.0 : config.alpha;
    rec.cos_t = state.grad_prev ? cosine(g, *state.grad_prev) : 0.0;

    state.x = std::move(x_new);
    state.m = std::move(m_new);
    state.v = std::move(v_new);
    state.acc_update = std::move(acc_new);
    state.grad_prev = std::move(eval.gradient);
    ++state.step_count;
    return rec;
}

}  // namespace elra
