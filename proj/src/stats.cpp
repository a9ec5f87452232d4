#include "elra/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elra {

std::optional<long> steps_to_threshold(const Trajectory& trajectory, double epsilon) {
    for (const StepRecord& r : trajectory.records) {
        if (r.f < epsilon) return r.t;
    }
    return std::nullopt;
}

std::optional<long> saddle_escape(const Trajectory& trajectory, double bound) {
    if (trajectory.iterates.size() != trajectory.records.size()) {
        throw std::invalid_argument("saddle_escape: trajectory has no per-step iterates");
    }
    for (std::size_t i = 0; i < trajectory.iterates.size(); ++i) {
        const Vector& x = trajectory.iterates[i];
        if (x.size() != 2) throw std::invalid_argument("saddle_escape: needs a 2-D trajectory");
        if (std::max(std::abs(x[0]), std::abs(x[1])) > bound) return trajectory.records[i].t;
    }
    return std::nullopt;
}

double ppr(const std::vector<Vector>& gradients) {
    PprAccumulator acc;
    for (const Vector& g : gradients) acc.add(g);
    return acc.value();
}

void PprAccumulator::add(const Vector& gradient) {
    if (sum_.empty()) sum_.assign(gradient.size(), 0.0);
    add_scaled(sum_, gradient, 1.0);
    norm_sum_ += norm(gradient);
}

double PprAccumulator::value() const {
    if (norm_sum_ <= 0.0) return 0.0;
    return norm(sum_) / norm_sum_;
}

namespace {

double percentile_nearest_rank(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    std::size_t rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    return sorted[rank - 1];
}

}  // namespace

RunStats aggregate_stats(const std::vector<std::vector<double>>& runs) {
    if (runs.empty()) throw std::invalid_argument("aggregate_stats: no runs");
    std::size_t len = 0;
    for (const auto& r : runs) {
        if (r.empty()) throw std::invalid_argument("aggregate_stats: empty run");
        len = std::max(len, r.size());
    }

    RunStats out;
    out.median.resize(len);
    out.p16.resize(len);
    out.p56.resize(len);
    out.mean.resize(len);
    out.min.resize(len);
    out.max.resize(len);
    out.runmin_median.resize(len);
    out.runmin_mean.resize(len);

    std::vector<double> running_min(runs.size());
    for (std::size_t k = 0; k < runs.size(); ++k) running_min[k] = runs[k].front();

    std::vector<double> column(runs.size());
    std::vector<double> runmin_column(runs.size());
    for (std::size_t t = 0; t < len; ++t) {
        double sum = 0.0;
        double runmin_sum = 0.0;
        for (std::size_t k = 0; k < runs.size(); ++k) {
            const auto& r = runs[k];
            const double v = t < r.size() ? r[t] : r.back();  // pad with last value
            running_min[k] = std::min(running_min[k], v);
            column[k] = v;
            runmin_column[k] = running_min[k];
            sum += v;
            runmin_sum += running_min[k];
        }
        std::sort(column.begin(), column.end());
        std::sort(runmin_column.begin(), runmin_column.end());
        out.median[t] = percentile_nearest_rank(column, 0.5);
        out.p16[t] = percentile_nearest_rank(column, 1.0 / 6.0);
        out.p56[t] = percentile_nearest_rank(column, 5.0 / 6.0);
        out.mean[t] = sum / static_cast<double>(runs.size());
        out.min[t] = column.front();
        out.max[t] = column.back();
        out.runmin_median[t] = percentile_nearest_rank(runmin_column, 0.5);
        out.runmin_mean[t] = runmin_sum / static_cast<double>(runs.size());
    }
    return out;
}

}  // namespace elra
