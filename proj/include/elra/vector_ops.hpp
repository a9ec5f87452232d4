#pragma once

#include <cstddef>
#include <vector>

namespace elra {

using Vector = std::vector<double>;

/// Euclidean inner product. Throws std::invalid_argument on dimension mismatch.
double dot(const Vector& u, const Vector& v);

double norm_squared(const Vector& v);
double norm(const Vector& v);

/// Cosine of the angle between u and v, clamped to [-1, 1].
/// Returns 0 if either norm is below 1e-30, so near-critical points
/// leave the step size unchanged under every update rule.
double cosine(const Vector& u, const Vector& v);

bool all_finite(const Vector& v);

/// target += a * v
void add_scaled(Vector& target, const Vector& v, double a);

/// x - a * g
Vector subtract_scaled(const Vector& x, const Vector& g, double a);

Vector scaled(const Vector& v, double a);

void ensure_same_dimension(const Vector& u, const Vector& v, const char* where);

}  // namespace elra
