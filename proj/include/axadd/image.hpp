#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace axadd {

class PgmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    unsigned width = 0;
    unsigned height = 0;
    std::vector<uint8_t> pixels;

    GrayImage() = default;
    GrayImage(unsigned w, unsigned h, uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

    uint8_t at(unsigned x, unsigned y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(unsigned x, unsigned y) { return pixels[static_cast<size_t>(y) * width + x]; }

    bool operator==(const GrayImage&) const = default;
};

/// Parses P5 (binary) or P2 (ASCII) with maxval 255. Malformed headers,
/// unsupported depth and truncated payloads raise distinct messages.
GrayImage load_pgm(std::span<const uint8_t> bytes);

/// Serializes as binary P5, maxval 255. load_pgm(save_pgm(img)) == img.
std::vector<uint8_t> save_pgm(const GrayImage& img);

GrayImage load_pgm_file(const std::string& path);
void save_pgm_file(const GrayImage& img, const std::string& path);

} // namespace axadd
