#include "elra/p2min.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace elra {

namespace {

constexpr double kDamperCap = 1e6;
constexpr double kGrowthBudget = 1e6;  // numerator of the damped growth cap
constexpr double kRestartAllowanceFactor = 24.0;

}  // namespace

P2MinState make_p2min_state(Vector x0, double alpha0) {
    if (!all_finite(x0)) throw std::invalid_argument("make_p2min_state: non-finite start point");
    if (!(alpha0 > 0.0)) throw std::invalid_argument("make_p2min_state: alpha0 must be positive");
    P2MinState s;
    s.x = std::move(x0);
    s.alpha = alpha0;
    return s;
}

double p2min_reference_best(const P2MinState& state, RestartMode mode) {
    if (mode == RestartMode::fixed_ratio) {
        if (state.completed_epochs > 0) return state.best_epoch_mean;
        if (state.epoch_loss_count > 0) return state.epoch_loss_sum / state.epoch_loss_count;
        return std::numeric_limits<double>::infinity();
    }
    return state.f_best;
}

bool restart_trigger(double f_curr, double f_best, RestartMode mode, double accept_damper) {
    if (!std::isfinite(f_best)) return false;
    if (mode == RestartMode::fixed_ratio) {
        return f_curr > 25.0 * f_best;
    }
    // Shift the value axis so f_best sits at |f_best|: the 25x rule then reads
    // f_curr - f_best > 24 |f_best|, and the damper scales the allowance down.
    const double allowance = kRestartAllowanceFactor * std::abs(f_best) / accept_damper;
    return f_curr - f_best > allowance;
}

void soft_restart(P2MinState& state, double f_curr, const AlphaBounds& bounds) {
    if (!state.grad_prev.has_value()) {
        throw std::logic_error("soft_restart: no prior step to retrace");
    }
    const double alpha_prev = state.alpha;
    const double alpha_new = alpha_update_parabola_value(
        alpha_prev, norm_squared(*state.grad_prev), state.f_prev, f_curr, bounds);
    // x_prev_prev is never stored: stepping back and forward along G_prev
    // collapses into one update of the current iterate.
    add_scaled(state.x, *state.grad_prev, alpha_prev - alpha_new);
    state.alpha = alpha_new;
    state.growth_damper = std::min(10.0 * (state.growth_damper + 1.0), kDamperCap);
    state.accept_damper = std::min(2.0 * state.accept_damper, kDamperCap);
}

std::optional<StepRecord> p2min_step(P2MinState& state, const Objective& objective,
                                     const AlphaBounds& bounds, RestartMode mode) {
    EvalResult eval = objective.evaluate(state.x);
    if (!std::isfinite(eval.value) || !all_finite(eval.gradient)) return std::nullopt;

    StepRecord rec;
    rec.t = state.step_count;
    rec.f = eval.value;

    if (!state.grad_prev.has_value()) {
        // First step: nothing to compare against, take a pure gradient step.
        Vector x_new = subtract_scaled(state.x, eval.gradient, state.alpha);
        if (!all_finite(x_new)) return std::nullopt;
        rec.alpha = state.alpha;
        rec.cos_t = 0.0;
        state.x = std::move(x_new);
        state.f_prev = eval.value;
        state.f_best = eval.value;
        if (mode == RestartMode::fixed_ratio) {
            state.epoch_loss_sum += eval.value;
            ++state.epoch_loss_count;
        }
        state.grad_prev = std::move(eval.gradient);
        ++state.step_count;
        return rec;
    }

    rec.cos_t = cosine(eval.gradient, *state.grad_prev);

    if (restart_trigger(eval.value, p2min_reference_best(state, mode), mode,
                        state.accept_damper)) {
        soft_restart(state, eval.value, bounds);
        if (!all_finite(state.x)) return std::nullopt;  // cannot happen with finite inputs
        rec.alpha = state.alpha;
        rec.restarted = true;
        // grad_prev and f_prev keep describing the retrace origin; the
        // rejected gradient is discarded.
    } else {
        AlphaBounds effective = bounds;
        effective.gamma_cap =
            std::min(bounds.gamma_cap, kGrowthBudget / (1.0 + state.growth_damper));
        const auto alpha_new =
            alpha_update_parabola_slope(state.alpha, *state.grad_prev, eval.gradient, effective);
        const double alpha = alpha_new.value_or(state.alpha);

        Vector x_new = subtract_scaled(state.x, eval.gradient, alpha);
        if (!all_finite(x_new)) return std::nullopt;

        state.accept_damper = (eval.value > state.f_prev)
                                  ? std::min(2.0 * state.accept_damper, kDamperCap)
                                  : std::max(1.0, 0.5 * state.accept_damper);
        state.growth_damper *= 0.5;
        state.x = std::move(x_new);
        state.alpha = alpha;
        state.f_prev = eval.value;
        state.f_best = std::min(state.f_best, eval.value);
        state.grad_prev = std::move(eval.gradient);
        rec.alpha = alpha;
    }

    if (mode == RestartMode::fixed_ratio) {
        state.epoch_loss_sum += eval.value;
        ++state.epoch_loss_count;
    }
    ++state.step_count;
    return rec;
}

void p2min_end_epoch(P2MinState& state) {
    if (state.epoch_loss_count > 0) {
        state.best_epoch_mean =
            std::min(state.best_epoch_mean, state.epoch_loss_sum / state.epoch_loss_count);
        ++state.completed_epochs;
    }
    state.epoch_loss_sum = 0.0;
    state.epoch_loss_count = 0;
}

}  // namespace elra
