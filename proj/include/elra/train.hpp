#pragma once

#include <cstdint>
#include <vector>

#include "elra/dataset.hpp"
#include "elra/runner.hpp"
#include "elra/stats.hpp"

namespace elra {

struct TrainConfig {
    std::size_t batch_size = 256;
    int epochs = 1;
    std::uint64_t seed = 0;  // drives weight init and batch shuffling
    OptimizerSpec optimizer{};
};

/// One row per optimizer step; losses are measured at the pre-step
/// parameters, so train_loss (current batch) and test_loss (full test set,
/// mean per-sample cross-entropy) describe the same point.
struct TrainPoint {
    long t = 0;
    double train_loss = 0.0;
    double test_loss = 0.0;
    double alpha = 0.0;
    double cos_t = 0.0;
    bool restarted = false;
};

struct TrainResult {
    std::vector<TrainPoint> series;
    double initial_test_loss = 0.0;
    double final_test_loss = 0.0;  // at the post-training parameters
    double best_test_loss = 0.0;
    double max_alpha = 0.0;
    bool diverged = false;
};

TrainResult train_run(const Dataset& train_data, const Dataset& test_data,
                      const TrainConfig& config);

struct MultiTrainResult {
    std::vector<TrainResult> per_seed;  // seed k uses split_seed(config.seed, 1000 + k)
    RunStats test_loss_stats;
};

MultiTrainResult train_multi(const Dataset& train_data, const Dataset& test_data,
                             const TrainConfig& config, int n_seeds);

}  // namespace elra
