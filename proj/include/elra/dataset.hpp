#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace elra {

/// Image classification samples: row-major pixels in [0, 1] plus integer
/// labels in [0, 9].
struct Dataset {
    std::size_t image_size = 784;
    std::vector<double> pixels;  // size() * image_size values
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }
    std::span<const double> image(std::size_t i) const {
        return {pixels.data() + i * image_size, image_size};
    }
    /// First n samples as a shallow copy; n larger than size() keeps all.
    Dataset subset(std::size_t n) const;
};

/// Deterministic stand-in for runs without real data: two Gaussian blobs in
/// pixel space labelled 0 and 1 (classes alternate). The blob centres depend
/// only on `seed`; `stream` separates the noise of e.g. train and test splits.
Dataset make_synthetic_dataset(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace elra
