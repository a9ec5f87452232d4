#pragma once

#include <cstddef>

#include "elra/vector_ops.hpp"

namespace elra {

struct EvalResult {
    double value = 0.0;
    Vector gradient;
};

/// Evaluation contract shared by analytic landscapes and the stochastic
/// network adapter: f(x) together with its exact gradient. Evaluation must
/// be reentrant; stochastic objectives may depend on externally selected
/// batches but must stay const through evaluate().
class Objective {
public:
    virtual ~Objective() = default;
    virtual std::size_t dimension() const = 0;
    virtual EvalResult evaluate(const Vector& x) const = 0;
};

}  // namespace elra
