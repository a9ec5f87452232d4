#include "elra/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "elra/rng.hpp"

namespace elra {

namespace {

struct Activations {
    double pre[Mlp::hidden_dim];
    double hidden[Mlp::hidden_dim];
    double prob[Mlp::output_dim];
    double loss;
};

// Forward pass for one sample; probabilities via max-shifted softmax.
Activations forward_sample(const Vector& params, std::span<const double> image, int label) {
    Activations act;
    const double* w1 = params.data() + Mlp::w1_offset;
    const double* b1 = params.data() + Mlp::b1_offset;
    const double* w2 = params.data() + Mlp::w2_offset;
    const double* b2 = params.data() + Mlp::b2_offset;

    for (std::size_t j = 0; j < Mlp::hidden_dim; ++j) {
        double s = b1[j];
        const double* row = w1 + j * Mlp::input_dim;
        for (std::size_t i = 0; i < Mlp::input_dim; ++i) s += row[i] * image[i];
        act.pre[j] = s;
        act.hidden[j] = s > 0.0 ? s : 0.0;
    }

    double logits[Mlp::output_dim];
    double max_logit = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < Mlp::output_dim; ++k) {
        double s = b2[k];
        const double* row = w2 + k * Mlp::hidden_dim;
        for (std::size_t j = 0; j < Mlp::hidden_dim; ++j) s += row[j] * act.hidden[j];
        logits[k] = s;
        max_logit = std::max(max_logit, s);
    }
    double z = 0.0;
    for (std::size_t k = 0; k < Mlp::output_dim; ++k) {
        act.prob[k] = std::exp(logits[k] - max_logit);
        z += act.prob[k];
    }
    for (std::size_t k = 0; k < Mlp::output_dim; ++k) act.prob[k] /= z;
    act.loss = -(logits[static_cast<std::size_t>(label)] - max_logit) + std::log(z);
    return act;
}

void check_inputs(const Vector& params, const Dataset& data,
                  std::span<const std::size_t> indices) {
    if (params.size() != Mlp::param_count) {
        throw std::invalid_argument("mlp: parameter vector must have " +
                                    std::to_string(Mlp::param_count) + " entries");
    }
    if (data.image_size != Mlp::input_dim) {
        throw std::invalid_argument("mlp: dataset images must have 784 pixels");
    }
    if (indices.empty()) throw std::invalid_argument("mlp: batch must be nonempty");
}

}  // namespace

Vector init_mlp_params(std::uint64_t seed) {
    Vector params(Mlp::param_count, 0.0);
    std::mt19937_64 gen(seed);
    const double limit1 = std::sqrt(6.0 / static_cast<double>(Mlp::input_dim));
    for (std::size_t i = Mlp::w1_offset; i < Mlp::b1_offset; ++i) {
        params[i] = uniform_range(gen, -limit1, limit1);
    }
    const double limit2 = std::sqrt(6.0 / static_cast<double>(Mlp::hidden_dim));
    for (std::size_t i = Mlp::w2_offset; i < Mlp::b2_offset; ++i) {
        params[i] = uniform_range(gen, -limit2, limit2);
    }
    return params;
}

double mlp_loss(const Vector& params, const Dataset& data,
                std::span<const std::size_t> indices) {
    check_inputs(params, data, indices);
    double total = 0.0;
    for (std::size_t idx : indices) {
        total += forward_sample(params, data.image(idx), data.labels[idx]).loss;
    }
    return total / static_cast<double>(indices.size());
}

EvalResult mlp_loss_and_grad(const Vector& params, const Dataset& data,
                             std::span<const std::size_t> indices) {
    check_inputs(params, data, indices);
    EvalResult out;
    out.gradient.assign(Mlp::param_count, 0.0);
    double* dw1 = out.gradient.data() + Mlp::w1_offset;
    double* db1 = out.gradient.data() + Mlp::b1_offset;
    double* dw2 = out.gradient.data() + Mlp::w2_offset;
    double* db2 = out.gradient.data() + Mlp::b2_offset;
    const double* w2 = params.data() + Mlp::w2_offset;

    const double inv_batch = 1.0 / static_cast<double>(indices.size());
    double total = 0.0;
    for (std::size_t idx : indices) {
        const auto image = data.image(idx);
        const int label = data.labels[idx];
        const Activations act = forward_sample(params, image, label);
        total += act.loss;

        double dlogit[Mlp::output_dim];
        for (std::size_t k = 0; k < Mlp::output_dim; ++k) {
            dlogit[k] = (act.prob[k] - (static_cast<int>(k) == label ? 1.0 : 0.0)) * inv_batch;
            db2[k] += dlogit[k];
            double* row = dw2 + k * Mlp::hidden_dim;
            for (std::size_t j = 0; j < Mlp::hidden_dim; ++j) row[j] += dlogit[k] * act.hidden[j];
        }
        for (std::size_t j = 0; j < Mlp::hidden_dim; ++j) {
            if (act.pre[j] <= 0.0) continue;  // ReLU gate (zero slope at the kink)
            double dh = 0.0;
            for (std::size_t k = 0; k < Mlp::output_dim; ++k) {
                dh += dlogit[k] * w2[k * Mlp::hidden_dim + j];
            }
            db1[j] += dh;
            double* row = dw1 + j * Mlp::input_dim;
            for (std::size_t i = 0; i < Mlp::input_dim; ++i) row[i] += dh * image[i];
        }
    }
    out.value = total * inv_batch;
    return out;
}

}  // namespace elra
