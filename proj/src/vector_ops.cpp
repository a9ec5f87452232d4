#include "elra/vector_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace elra {

void ensure_same_dimension(const Vector& u, const Vector& v, const char* where) {
    if (u.size() != v.size()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    }
}

double dot(const Vector& u, const Vector& v) {
    ensure_same_dimension(u, v, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double norm_squared(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double norm(const Vector& v) { return std::sqrt(norm_squared(v)); }

double cosine(const Vector& u, const Vector& v) {
    ensure_same_dimension(u, v, "cosine");
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu < 1e-30 || nv < 1e-30) return 0.0;
    return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

bool all_finite(const Vector& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void add_scaled(Vector& target, const Vector& v, double a) {
    ensure_same_dimension(target, v, "add_scaled");
    for (std::size_t i = 0; i < v.size(); ++i) target[i] += a * v[i];
}

Vector subtract_scaled(const Vector& x, const Vector& g, double a) {
    ensure_same_dimension(x, g, "subtract_scaled");
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - a * g[i];
    return out;
}

Vector scaled(const Vector& v, double a) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = a * v[i];
    return out;
}

}  // namespace elra
