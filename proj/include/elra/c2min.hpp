#pragma once

#include <optional>

#include "elra/alpha_update.hpp"
#include "elra/objective.hpp"
#include "elra/step_record.hpp"

namespace elra {

/// State of the cosine-controlled optimizer. The momentum is built from
/// averaged pairs of successive gradients,
///   M <- beta1 * M + (1 - beta1) * (G_t + G_{t-1}) / 2,
/// and the step mixes the raw gradient with it using a separate beta2:
///   x <- x - alpha * ((1 - beta2) * G + beta2 * M).
struct C2MinState {
    Vector x;
    double alpha = 1e-5;
    std::optional<Vector> grad_prev;
    Vector momentum;
    double beta1 = 0.8;
    double beta2 = 0.7;
    long step_count = 0;
};

C2MinState make_c2min_state(Vector x0, double alpha0 = 1e-5);

/// One c2min step: evaluate (f, G) at the current iterate, adapt alpha from
/// the cosine between G and the previous gradient (raw gradients, not mixed
/// directions), refresh the pair-averaged momentum, and move. The first step
/// is a plain gradient step with alpha0 while momentum warms up.
/// Returns nullopt if f, G, or the new iterate is non-finite; the state is
/// left at its last valid value in that case.
std::optional<StepRecord> c2min_step(C2MinState& state, const Objective& objective,
                                     const AlphaBounds& bounds);

}  // namespace elra
