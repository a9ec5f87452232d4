#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elra/dataset.hpp"
#include "elra/objective.hpp"

namespace elra {

/// Fully connected 784 -> 10 (ReLU) -> 10 classifier over one flat parameter
/// vector, layer-major: W1 (10x784 row-major), b1 (10), W2 (10x10 row-major),
/// b2 (10). Loss is mean softmax cross-entropy, computed max-shifted.
struct Mlp {
    static constexpr std::size_t input_dim = 784;
    static constexpr std::size_t hidden_dim = 10;
    static constexpr std::size_t output_dim = 10;

    static constexpr std::size_t w1_offset = 0;
    static constexpr std::size_t b1_offset = hidden_dim * input_dim;
    static constexpr std::size_t w2_offset = b1_offset + hidden_dim;
    static constexpr std::size_t b2_offset = w2_offset + output_dim * hidden_dim;
    static constexpr std::size_t param_count = b2_offset + output_dim;  // 7960
};

/// He-style uniform weight init (limit sqrt(6 / fan_in)), zero biases.
Vector init_mlp_params(std::uint64_t seed);

/// Mean cross-entropy of the batch selected by `indices`.
double mlp_loss(const Vector& params, const Dataset& data, std::span<const std::size_t> indices);

/// Mean cross-entropy and its gradient with respect to the flat parameters.
EvalResult mlp_loss_and_grad(const Vector& params, const Dataset& data,
                             std::span<const std::size_t> indices);

/// Stochastic adapter: exposes the network loss on the currently selected
/// batch through the shared evaluation contract. The training loop swaps the
/// batch between optimizer steps.
class MlpBatchObjective final : public Objective {
public:
    explicit MlpBatchObjective(const Dataset& data) : data_(&data) {}
    void set_batch(std::vector<std::size_t> indices) { indices_ = std::move(indices); }
    std::size_t dimension() const override { return Mlp::param_count; }
    EvalResult evaluate(const Vector& params) const override {
        return mlp_loss_and_grad(params, *data_, indices_);
    }

private:
    const Dataset* data_;
    std::vector<std::size_t> indices_;
};

}  // namespace elra
