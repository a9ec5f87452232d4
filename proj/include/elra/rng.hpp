#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace elra {

/// SplitMix64-style mix of a base seed and a stream id, so independent
/// consumers (weight init, batching, per-seed runs) never share a stream.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Hand-rolled (instead of std::uniform_real_distribution) so byte-identical
/// results do not depend on the standard library implementation.
double uniform01(std::mt19937_64& gen);

double uniform_range(std::mt19937_64& gen, double lo, double hi);

/// Standard normal via Box-Muller; consumes two generator outputs per value.
double gaussian(std::mt19937_64& gen);

/// In-place Fisher-Yates shuffle driven by modulo-reduced generator outputs.
void fisher_yates(std::vector<std::size_t>& values, std::mt19937_64& gen);

}  // namespace elra
