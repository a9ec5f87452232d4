#pragma once

#include <cstdint>
#include <vector>

#include "elra/dataset.hpp"

namespace elra {

struct BatchPlan {
    std::size_t batch_size = 256;
    std::uint64_t seed = 0;
    bool shuffle_each_epoch = true;
};

/// Index batches for one epoch. The permutation is a Fisher-Yates shuffle of
/// 0..n-1 driven by an mt19937_64 seeded from (seed, epoch), so the sequence
/// is reproducible per epoch; the final short batch is kept. Without
/// shuffling the order is 0..n-1 in every epoch.
std::vector<std::vector<std::size_t>> make_batches(std::size_t n, const BatchPlan& plan,
                                                   long epoch);

std::vector<std::vector<std::size_t>> make_batches(const Dataset& dataset, const BatchPlan& plan,
                                                   long epoch);

}  // namespace elra
