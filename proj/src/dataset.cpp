#include "elra/dataset.hpp"

#include <algorithm>

#include "elra/rng.hpp"

namespace elra {

Dataset Dataset::subset(std::size_t n) const {
    n = std::min(n, size());
    Dataset out;
    out.image_size = image_size;
    out.pixels.assign(pixels.begin(), pixels.begin() + static_cast<std::ptrdiff_t>(n * image_size));
    out.labels.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

Dataset make_synthetic_dataset(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
    constexpr std::size_t kImageSize = 784;
    constexpr double kNoise = 0.15;

    // Blob centres are a function of the seed alone so that every split drawn
    // from the same seed sees the same two classes.
    std::mt19937_64 centre_gen(split_seed(seed, 0xB10B));
    std::vector<double> centres(2 * kImageSize);
    for (double& c : centres) c = uniform_range(centre_gen, 0.1, 0.9);

    std::mt19937_64 noise_gen(split_seed(seed, 0x4015E + stream));
    Dataset out;
    out.image_size = kImageSize;
    out.pixels.resize(n * kImageSize);
    out.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = static_cast<int>(i % 2);
        out.labels[i] = label;
        const double* centre = centres.data() + static_cast<std::size_t>(label) * kImageSize;
        double* px = out.pixels.data() + i * kImageSize;
        for (std::size_t p = 0; p < kImageSize; ++p) {
            px[p] = std::clamp(centre[p] + kNoise * gaussian(noise_gen), 0.0, 1.0);
        }
    }
    return out;
}

}  // namespace elra
