#include "elra/train.hpp"

#include <algorithm>
#include <numeric>

#include "elra/batching.hpp"
#include "elra/mlp.hpp"
#include "elra/rng.hpp"

namespace elra {

TrainResult train_run(const Dataset& train_data, const Dataset& test_data,
                      const TrainConfig& config) {
    Vector params = init_mlp_params(split_seed(config.seed, 11));
    auto stepper = make_stepper(config.optimizer, std::move(params));

    MlpBatchObjective objective(train_data);
    std::vector<std::size_t> test_indices(test_data.size());
    std::iota(test_indices.begin(), test_indices.end(), std::size_t{0});

    BatchPlan plan;
    plan.batch_size = config.batch_size;
    plan.seed = split_seed(config.seed, 12);
    plan.shuffle_each_epoch = true;

    TrainResult result;
    result.initial_test_loss = mlp_loss(stepper->position(), test_data, test_indices);
    result.best_test_loss = result.initial_test_loss;

    long t = 0;
    for (int epoch = 0; epoch < config.epochs && !result.diverged; ++epoch) {
        for (auto& batch : make_batches(train_data, plan, epoch)) {
            const double test_loss = mlp_loss(stepper->position(), test_data, test_indices);
            objective.set_batch(std::move(batch));
            const auto rec = stepper->step(objective);
            if (!rec) {
                result.diverged = true;
                break;
            }
            result.series.push_back({t, rec->f, test_loss, rec->alpha, rec->cos_t, rec->restarted});
            result.best_test_loss = std::min(result.best_test_loss, test_loss);
            result.max_alpha = std::max(result.max_alpha, rec->alpha);
            ++t;
        }
        stepper->end_epoch();
    }
    result.final_test_loss = mlp_loss(stepper->position(), test_data, test_indices);
    result.best_test_loss = std::min(result.best_test_loss, result.final_test_loss);
    return result;
}

MultiTrainResult train_multi(const Dataset& train_data, const Dataset& test_data,
                             const TrainConfig& config, int n_seeds) {
    MultiTrainResult out;
    std::vector<std::vector<double>> test_series;
    for (int k = 0; k < n_seeds; ++k) {
        TrainConfig per_seed = config;
        per_seed.seed = split_seed(config.seed, 1000 + static_cast<std::uint64_t>(k));
        out.per_seed.push_back(train_run(train_data, test_data, per_seed));
        std::vector<double> series;
        for (const TrainPoint& p : out.per_seed.back().series) series.push_back(p.test_loss);
        series.push_back(out.per_seed.back().final_test_loss);
        test_series.push_back(std::move(series));
    }
    out.test_loss_stats = aggregate_stats(test_series);
    return out;
}

}  // namespace elra
