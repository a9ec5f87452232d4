#include "elra/alpha_update.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elra {

void AlphaBounds::validate() const {
    if (!(alpha_min > 0.0) || !(alpha_min < alpha_max)) {
        throw std::invalid_argument("AlphaBounds: need 0 < alpha_min < alpha_max");
    }
    if (!(gamma_cap > 1.0)) {
        throw std::invalid_argument("AlphaBounds: gamma_cap must exceed 1");
    }
}

double AlphaBounds::clamp(double alpha) const {
    return std::clamp(alpha, alpha_min, alpha_max);
}

double alpha_update_exponential(double alpha, double cos_t) {
    return alpha * std::pow(std::sqrt(2.0), cos_t);
}

double alpha_update_linear(double alpha, double cos_t) {
    return alpha * (1.0 + 0.5 * cos_t);
}

namespace {

// Screen a raw growth factor num/den through its reciprocal, then apply the
// absolute alpha clamps. `recip` must equal den/num for num > 0.
double screened_growth(double alpha, double num, double den, double gamma_cap,
                       const AlphaBounds& bounds) {
    const double recip = den / num;
    double h;
    if (recip >= 1.0 / gamma_cap) {
        h = num / den;
    } else {
        // Covers den <= 0 (factor negative or infinite), factors beyond the
        // cap, and NaN fallout from degenerate inputs.
        h = gamma_cap;
    }
    return bounds.clamp(alpha * h);
}

}  // namespace

std::optional<double> alpha_update_parabola_slope(double alpha, const Vector& g_prev,
                                                  const Vector& g_curr,
                                                  const AlphaBounds& bounds) {
    const double nn = norm_squared(g_prev);
    if (nn == 0.0) return std::nullopt;
    const double den = nn - dot(g_prev, g_curr);
    return screened_growth(alpha, nn, den, bounds.gamma_cap, bounds);
}

double alpha_update_parabola_value(double alpha, double g_prev_norm_sq, double f_prev,
                                   double f_curr, const AlphaBounds& bounds) {
    const double num = alpha * g_prev_norm_sq;
    if (!(num > 0.0)) return bounds.clamp(alpha);
    const double den = 2.0 * (f_curr - f_prev + num);
    return screened_growth(alpha, num, den, bounds.gamma_cap, bounds);
}

}  // namespace elra
