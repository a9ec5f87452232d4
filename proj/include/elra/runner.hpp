#pragma once

#include <memory>
#include <optional>

#include "elra/baselines.hpp"
#include "elra/c2min.hpp"
#include "elra/objective.hpp"
#include "elra/p2min.hpp"
#include "elra/stats.hpp"
#include "elra/trajectory.hpp"

namespace elra {

enum class OptimizerKind { c2min, p2min, sgd, adam, rmsprop, adadelta };

/// Everything needed to instantiate one optimizer for one run.
struct OptimizerSpec {
    OptimizerKind kind = OptimizerKind::p2min;
    double alpha0 = 1e-5;             // c2min / p2min initial learning rate
    AlphaBounds bounds{};             // c2min / p2min
    RestartMode restart_mode = RestartMode::damped;  // p2min
    BaselineConfig baseline{};        // sgd / adam / rmsprop / adadelta
};

/// Uniform stepping interface over all optimizers. step() returns nullopt on
/// divergence (non-finite value, gradient, or iterate) and leaves the
/// underlying state at its last valid point.
class Stepper {
public:
    virtual ~Stepper() = default;
    virtual std::optional<StepRecord> step(const Objective& objective) = 0;
    virtual const Vector& position() const = 0;
    /// Gradient adopted by the most recent accepted step (empty before the
    /// first step; unchanged by retraces, whose evaluation is discarded).
    virtual const std::optional<Vector>& last_gradient() const = 0;
    /// Epoch boundary notification; only p2min's restart reference uses it.
    virtual void end_epoch() {}
};

std::unique_ptr<Stepper> make_stepper(const OptimizerSpec& spec, Vector x0);

struct RunResult {
    Trajectory trajectory;
    bool diverged = false;
    double ppr = 0.0;  // over gradients of accepted (non-retrace) steps
};

/// Drive one optimizer on one deterministic objective for at most max_steps
/// steps, optionally stopping once f drops below stop_below.
RunResult run_fixed(const Objective& objective, Vector x0, const OptimizerSpec& spec,
                    long max_steps, std::optional<double> stop_below = std::nullopt,
                    bool record_iterates = true);

}  // namespace elra
