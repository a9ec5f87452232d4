#include "elra/batching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "elra/rng.hpp"

namespace elra {

std::vector<std::vector<std::size_t>> make_batches(std::size_t n, const BatchPlan& plan,
                                                   long epoch) {
    if (plan.batch_size == 0) throw std::invalid_argument("make_batches: batch_size must be >= 1");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (plan.shuffle_each_epoch) {
        std::mt19937_64 gen(split_seed(plan.seed, static_cast<std::uint64_t>(epoch)));
        fisher_yates(order, gen);
    }
    std::vector<std::vector<std::size_t>> batches;
    for (std::size_t start = 0; start < n; start += plan.batch_size) {
        const std::size_t end = std::min(n, start + plan.batch_size);
        batches.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                             order.begin() + static_cast<std::ptrdiff_t>(end));
    }
    return batches;
}

std::vector<std::vector<std::size_t>> make_batches(const Dataset& dataset, const BatchPlan& plan,
                                                   long epoch) {
    return make_batches(dataset.size(), plan, epoch);
}

}  // namespace elra
