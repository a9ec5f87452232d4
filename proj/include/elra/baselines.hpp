#pragma once

#include <optional>

#include "elra/objective.hpp"
#include "elra/step_record.hpp"

namespace elra {

enum class BaselineKind { sgd, adam, rmsprop, adadelta };

/// Hyper-parameters for the reference optimizers. adam uses beta1/beta2 as
/// its moment decays, rmsprop reads its squared-gradient decay from beta2,
/// adadelta uses rho and ignores alpha entirely (its update is unit-free).
struct BaselineConfig {
    BaselineKind kind = BaselineKind::sgd;
    double alpha = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double rho = 0.95;

    void validate() const;
};

struct BaselineState {
    Vector x;
    Vector m;           // first moment (adam)
    Vector v;           // squared-gradient accumulator (adam / rmsprop / adadelta)
    Vector acc_update;  // squared-update accumulator (adadelta)
    std::optional<Vector> grad_prev;
    long step_count = 0;
};

BaselineState make_baseline_state(Vector x0);

/// One textbook update of the optimizer selected by config.kind. Adam is
/// bias-corrected with epsilon added to the root of the second moment.
/// Returns nullopt on non-finite values, leaving the state untouched.
std::optional<StepRecord> baseline_step(BaselineState& state, const Objective& objective,
                                        const BaselineConfig& config);

}  // namespace elra
