#pragma once

#include <optional>

#include "elra/vector_ops.hpp"

namespace elra {

/// Global limits on the learning rate and its per-step growth factor.
/// alpha is always kept inside [alpha_min, alpha_max]; the parabola-based
/// updates additionally cap the multiplicative step-to-step growth at
/// gamma_cap.
struct AlphaBounds {
    double alpha_min = 1e-8;
    double alpha_max = 1e6;
    double gamma_cap = 1e6;

    void validate() const;
    double clamp(double alpha) const;
};

/// alpha * sqrt(2)^cos_t. Mild exponential response: one full-cosine step
/// scales alpha by sqrt(2), a full anti-parallel step by 1/sqrt(2).
double alpha_update_exponential(double alpha, double cos_t);

/// alpha * (1 + cos_t / 2). Linearized variant with asymmetric response:
/// halves alpha at cos_t = -1, grows it by 3/2 at cos_t = +1. Output is
/// always inside [0.5 alpha, 1.5 alpha].
double alpha_update_linear(double alpha, double cos_t);

/// Growth factor from the parabola through the last two iterates fitted by
/// its slopes:  h = |g_prev|^2 / (|g_prev|^2 - <g_prev, g_curr>).
/// The factor is screened through its reciprocal: 1/h < 1/gamma_cap covers
/// both h < 0 (wrong-sided vertex) and h > gamma_cap (near-linear stretch)
/// in a single test, and both degenerate cases map to gamma_cap. The result
/// alpha * h is clamped to [alpha_min, alpha_max].
/// Returns nullopt when g_prev has zero norm; the caller treats that as a
/// converged / critical-point signal.
std::optional<double> alpha_update_parabola_slope(double alpha, const Vector& g_prev,
                                                  const Vector& g_curr,
                                                  const AlphaBounds& bounds);

/// Growth factor from the parabola fitted by the slope -|g_prev| at the
/// step origin and the two function values:
///   h = alpha |g_prev|^2 / (2 (f_curr - f_prev + alpha |g_prev|^2)).
/// Shares the reciprocal screening and absolute clamps above. Whenever the
/// step ascended (f_curr >= f_prev) the factor is at most 0.5, which is the
/// property the soft restart relies on.
double alpha_update_parabola_value(double alpha, double g_prev_norm_sq, double f_prev,
                                   double f_curr, const AlphaBounds& bounds);

}  // namespace elra
