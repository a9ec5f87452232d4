#pragma once

#include <limits>
#include <optional>

#include "elra/alpha_update.hpp"
#include "elra/objective.hpp"
#include "elra/step_record.hpp"

namespace elra {

/// Restart trigger family.
///  - fixed_ratio: retrace once the current value exceeds 25x the best value
///    seen; suits non-negative stochastic losses, where the best value is the
///    best per-epoch mean (running mean within the first epoch).
///  - damped: retrace once the rise above the best value exceeds an allowance
///    of 24 |f_best| scaled down by the acceptance damper D; sign-agnostic,
///    suits deterministic landscapes. The allowance reduces to the fixed
///    25x rule for positive f_best at D = 1.
enum class RestartMode { fixed_ratio, damped };

/// State of the parabola-step optimizer. No momentum; alpha is re-estimated
/// every step from the slope-fitted parabola, explosions are undone by a
/// soft restart that retraces to the previous iterate with a reduced alpha.
struct P2MinState {
    Vector x;
    double alpha = 1e-5;
    std::optional<Vector> grad_prev;
    double f_prev = std::numeric_limits<double>::quiet_NaN();
    double f_best = std::numeric_limits<double>::infinity();
    /// Acceptance damper D >= 1: doubles when f rises step-over-step, halves
    /// (floored at 1) otherwise; tightens the restart allowance in rough phases.
    double accept_damper = 1.0;
    /// Growth damper d in [0, 1e6]: jumps to 10(d+1) on every restart and
    /// halves otherwise; shrinks the per-step growth cap to 1e6 / (1 + d).
    double growth_damper = 0.0;
    long step_count = 0;

    // Epoch-mean tracking for fixed_ratio mode.
    double epoch_loss_sum = 0.0;
    long epoch_loss_count = 0;
    double best_epoch_mean = std::numeric_limits<double>::infinity();
    long completed_epochs = 0;
};

P2MinState make_p2min_state(Vector x0, double alpha0 = 1e-5);

/// Reference f_best value the restart trigger compares against: raw best in
/// damped mode, best (or running first-epoch) mean batch loss in fixed_ratio
/// mode.
double p2min_reference_best(const P2MinState& state, RestartMode mode);

bool restart_trigger(double f_curr, double f_best, RestartMode mode, double accept_damper);

/// Retrace to the predecessor of the current iterate with a reduced alpha
/// computed from the value-fitted parabola, using the memory-free identity
///   x <- x + (alpha_prev - alpha_new) * G_prev,
/// then bump both dampers. f_curr is the (rejected) value that triggered the
/// restart. Throws std::logic_error if no step has been taken yet.
void soft_restart(P2MinState& state, double f_curr, const AlphaBounds& bounds);

/// One p2min step: evaluate (f, G); either retrace (when the restart policy
/// fires) or adapt alpha through the slope-fitted parabola with the growth
/// cap min(gamma_cap, 1e6 / (1 + d)) and take a plain gradient step. The
/// first step is a pure gradient step with alpha0.
/// Returns nullopt on non-finite values, leaving the state untouched.
std::optional<StepRecord> p2min_step(P2MinState& state, const Objective& objective,
                                     const AlphaBounds& bounds, RestartMode mode);

/// Close the current epoch in fixed_ratio mode: fold the running mean batch
/// loss into the best-epoch-mean reference and reset the accumulators.
void p2min_end_epoch(P2MinState& state);

}  // namespace elra
