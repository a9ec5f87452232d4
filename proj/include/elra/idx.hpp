#pragma once

#include <stdexcept>
#include <string>

#include "elra/dataset.hpp"

namespace elra {

class IdxParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// IDX container layout (all integers big-endian):
//   images: magic 0x00000803, count, rows, cols, then count*rows*cols bytes
//   labels: magic 0x00000801, count, then count bytes
// Pixel bytes are scaled to [0, 1] by dividing by 255.

/// Load a matching image/label file pair. Throws IdxParseError on a wrong
/// magic number, a truncated file, or an image/label count mismatch.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

}  // namespace elra
