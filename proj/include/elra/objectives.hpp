#pragma once

#include <memory>

#include "elra/objective.hpp"
#include "elra/orthogonal_map.hpp"

namespace elra {

/// f(x1,x2) = x1^2 - x2^2, the normal form of a non-degenerate 2-D saddle.
class SaddleObjective final : public Objective {
public:
    std::size_t dimension() const override { return 2; }
    EvalResult evaluate(const Vector& x) const override;
};

/// f(x) = sum_i c_i x_i^2 with all c_i > 0.
class BowlObjective final : public Objective {
public:
    explicit BowlObjective(Vector coefficients);
    std::size_t dimension() const override { return coeffs_.size(); }
    EvalResult evaluate(const Vector& x) const override;
    const Vector& coefficients() const { return coeffs_; }

private:
    Vector coeffs_;
};

/// f(x1,x2) = (1-x1)^2 + 100 (x2 - x1^2)^2; global minimum f(1,1) = 0.
class RosenbrockObjective final : public Objective {
public:
    std::size_t dimension() const override { return 2; }
    EvalResult evaluate(const Vector& x) const override;
};

/// Composition with an orthogonal coordinate map:
///   f_rot(x) = f_inner(Q x),  grad f_rot(x) = Q^T grad f_inner(Q x).
/// Wrapping any landscape this way gives one code path for all
/// rotated-axes experiments.
class RotatedObjective final : public Objective {
public:
    RotatedObjective(std::shared_ptr<const Objective> inner, OrthogonalMap map);
    std::size_t dimension() const override { return map_.dimension(); }
    EvalResult evaluate(const Vector& x) const override;

private:
    std::shared_ptr<const Objective> inner_;
    OrthogonalMap map_;
};

}  // namespace elra
