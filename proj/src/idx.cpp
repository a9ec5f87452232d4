#include "elra/idx.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

namespace elra {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::uint32_t read_be_u32(std::ifstream& in, const std::string& path) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw IdxParseError(path + ": truncated header");
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

std::ifstream open_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IdxParseError(path + ": cannot open file");
    return in;
}

}  // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
    std::ifstream img = open_binary(images_path);
    const std::uint32_t img_magic = read_be_u32(img, images_path);
    if (img_magic != kImageMagic) {
        throw IdxParseError(images_path + ": bad magic number " + std::to_string(img_magic) +
                            " (expected " + std::to_string(kImageMagic) + ")");
    }
    const std::uint32_t n_images = read_be_u32(img, images_path);
    const std::uint32_t rows = read_be_u32(img, images_path);
    const std::uint32_t cols = read_be_u32(img, images_path);
    const std::size_t image_size = std::size_t(rows) * std::size_t(cols);

    std::ifstream lab = open_binary(labels_path);
    const std::uint32_t lab_magic = read_be_u32(lab, labels_path);
    if (lab_magic != kLabelMagic) {
        throw IdxParseError(labels_path + ": bad magic number " + std::to_string(lab_magic) +
                            " (expected " + std::to_string(kLabelMagic) + ")");
    }
    const std::uint32_t n_labels = read_be_u32(lab, labels_path);
    if (n_images != n_labels) {
        throw IdxParseError("image/label count mismatch: " + std::to_string(n_images) + " vs " +
                            std::to_string(n_labels));
    }

    std::vector<unsigned char> img_bytes(std::size_t(n_images) * image_size);
    img.read(reinterpret_cast<char*>(img_bytes.data()),
             static_cast<std::streamsize>(img_bytes.size()));
    if (static_cast<std::size_t>(img.gcount()) != img_bytes.size()) {
        throw IdxParseError(images_path + ": truncated pixel data");
    }

    std::vector<unsigned char> lab_bytes(n_labels);
    lab.read(reinterpret_cast<char*>(lab_bytes.data()),
             static_cast<std::streamsize>(lab_bytes.size()));
    if (static_cast<std::size_t>(lab.gcount()) != lab_bytes.size()) {
        throw IdxParseError(labels_path + ": truncated label data");
    }

    Dataset out;
    out.image_size = image_size;
    out.pixels.resize(img_bytes.size());
    for (std::size_t i = 0; i < img_bytes.size(); ++i) {
        out.pixels[i] = static_cast<double>(img_bytes[i]) / 255.0;
    }
    out.labels.resize(n_labels);
    for (std::size_t i = 0; i < lab_bytes.size(); ++i) {
        out.labels[i] = static_cast<int>(lab_bytes[i]);
    }
    return out;
}

}  // namespace elra
