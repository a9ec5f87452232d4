#pragma once

#include <optional>
#include <vector>

#include "elra/trajectory.hpp"
#include "elra/vector_ops.hpp"

namespace elra {

/// Smallest recorded t with f_t < epsilon, or nullopt if the threshold is
/// never reached.
std::optional<long> steps_to_threshold(const Trajectory& trajectory, double epsilon);

/// Smallest recorded t whose iterate leaves the square max(|x1|,|x2|) > bound,
/// or nullopt. Requires a 2-D trajectory with iterates recorded.
std::optional<long> saddle_escape(const Trajectory& trajectory, double bound = 2.0);

/// Path-progress ratio |sum G_t| / sum |G_t| in [0, 1]: 1 for a perfectly
/// collinear gradient history, 0 for full cancellation. Returns 0 when every
/// gradient is zero.
double ppr(const std::vector<Vector>& gradients);

/// Streaming form of ppr for long runs.
class PprAccumulator {
public:
    void add(const Vector& gradient);
    double value() const;

private:
    Vector sum_;
    double norm_sum_ = 0.0;
};

/// Elementwise order statistics across runs. Percentiles use the nearest-rank
/// rule: the p-quantile of N sorted values is the element at 1-based index
/// ceil(p * N). runmin_* aggregate each run's running minimum curve.
struct RunStats {
    std::vector<double> median;
    std::vector<double> p16;  // 1/6 percentile
    std::vector<double> p56;  // 5/6 percentile
    std::vector<double> mean;
    std::vector<double> min;
    std::vector<double> max;
    std::vector<double> runmin_median;
    std::vector<double> runmin_mean;
};

/// Aggregate per-step series of possibly different lengths; shorter runs are
/// padded with their last value. Throws std::invalid_argument on empty input.
RunStats aggregate_stats(const std::vector<std::vector<double>>& runs);

}  // namespace elra
