#pragma once

#include <vector>

#include "elra/step_record.hpp"
#include "elra/vector_ops.hpp"

namespace elra {

/// Ordered step records with t strictly increasing from 0. iterates, when
/// recorded, holds the point each record was evaluated at (same index).
struct Trajectory {
    std::vector<StepRecord> records;
    std::vector<Vector> iterates;
};

}  // namespace elra
