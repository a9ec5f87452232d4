#include "elra/runner.hpp"

#include <utility>

namespace elra {

namespace {

class C2MinStepper final : public Stepper {
public:
    C2MinStepper(const OptimizerSpec& spec, Vector x0)
        : state_(make_c2min_state(std::move(x0), spec.alpha0)), bounds_(spec.bounds) {
        bounds_.validate();
    }
    std::optional<StepRecord> step(const Objective& objective) override {
        return c2min_step(state_, objective, bounds_);
    }
    const Vector& position() const override { return state_.x; }
    const std::optional<Vector>& last_gradient() const override { return state_.grad_prev; }

private:
    C2MinState state_;
    AlphaBounds bounds_;
};

class P2MinStepper final : public Stepper {
public:
    P2MinStepper(const OptimizerSpec& spec, Vector x0)
        : state_(make_p2min_state(std::move(x0), spec.alpha0)),
          bounds_(spec.bounds),
          mode_(spec.restart_mode) {
        bounds_.validate();
    }
    std::optional<StepRecord> step(const Objective& objective) override {
        return p2min_step(state_, objective, bounds_, mode_);
    }
    const Vector& position() const override { return state_.x; }
    const std::optional<Vector>& last_gradient() const override { return state_.grad_prev; }
    void end_epoch() override { p2min_end_epoch(state_); }

private:
    P2MinState state_;
    AlphaBounds bounds_;
    RestartMode mode_;
};

class BaselineStepper final : public Stepper {
public:
    BaselineStepper(const OptimizerSpec& spec, Vector x0)
        : state_(make_baseline_state(std::move(x0))), config_(spec.baseline) {
        config_.validate();
    }
    std::optional<StepRecord> step(const Objective& objective) override {
        return baseline_step(state_, objective, config_);
    }
    const Vector& position() const override { return state_.x; }
    const std::optional<Vector>& last_gradient() const override { return state_.grad_prev; }

private:
    BaselineState state_;
    BaselineConfig config_;
};

BaselineKind to_baseline_kind(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::sgd: return BaselineKind::sgd;
        case OptimizerKind::adam: return BaselineKind::adam;
        case OptimizerKind::rmsprop: return BaselineKind::rmsprop;
        default: return BaselineKind::adadelta;
    }
}

}  // namespace

std::unique_ptr<Stepper> make_stepper(const OptimizerSpec& spec, Vector x0) {
    switch (spec.kind) {
        case OptimizerKind::c2min:
            return std::make_unique<C2MinStepper>(spec, std::move(x0));
        case OptimizerKind::p2min:
            return std::make_unique<P2MinStepper>(spec, std::move(x0));
        default: {
            OptimizerSpec synced = spec;
            synced.baseline.kind = to_baseline_kind(spec.kind);
            return std::make_unique<BaselineStepper>(synced, std::move(x0));
        }
    }
}

RunResult run_fixed(const Objective& objective, Vector x0, const OptimizerSpec& spec,
                    long max_steps, std::optional<double> stop_below, bool record_iterates) {
    auto stepper = make_stepper(spec, std::move(x0));
    RunResult result;
    PprAccumulator ppr_acc;
    for (long t = 0; t < max_steps; ++t) {
        if (record_iterates) result.trajectory.iterates.push_back(stepper->position());
        auto rec = stepper->step(objective);
        if (!rec) {
            result.diverged = true;
            if (record_iterates) result.trajectory.iterates.pop_back();
            break;
        }
        result.trajectory.records.push_back(*rec);
        if (!rec->restarted && stepper->last_gradient()) {
            ppr_acc.add(*stepper->last_gradient());
        }
        if (stop_below && rec->f < *stop_below) break;
    }
    result.ppr = ppr_acc.value();
    return result;
}

}  // namespace elra
