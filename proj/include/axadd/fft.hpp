#pragma once

#include <cstdint>
#include <vector>

#include "axadd/adders.hpp"
#include "axadd/image.hpp"

namespace axadd {

/// Two's-complement fixed-point format of the transform words. total_bits
/// must equal the adder width n; frac_bits sets the twiddle/multiplier
/// precision.
struct FixedFormat {
    unsigned total_bits = 32;
    unsigned frac_bits = 15;
};

struct ComplexFx {
    int64_t re = 0;
    int64_t im = 0;

    bool operator==(const ComplexFx&) const = default;
};

struct SpectrumField {
    unsigned width = 0;
    unsigned height = 0;
    std::vector<ComplexFx> bins; // row-major

    const ComplexFx& at(unsigned x, unsigned y) const {
        return bins[static_cast<size_t>(y) * width + x];
    }
};

/// Pixels enter the transform at 2^8 ulp per gray level.
constexpr unsigned kPixelScaleBits = 8;

/// Row-column radix-2 DIT transforms. Every butterfly add/subtract routes
/// through approx_add on n-bit words (subtraction negates the subtrahend
/// exactly first); twiddle products are exact fixed-point multiplies with
/// round-to-nearest; residual overflow saturates.
///
/// Scaling: each forward 1-D pass right-shifts its last max(0, stages-6)
/// stages, each inverse pass right-shifts the complementary first stages, so
/// every dimension nets a 2^-stages gain and the round trip is the identity
/// while the spectrum keeps its low bins inside the integer headroom.
SpectrumField fft2d(const GrayImage& img, const AdderConfig& cfg, FixedFormat fmt,
                    unsigned threads = 0);

/// Inverse transform; output rounds to integers clamped to [0, 255].
GrayImage ifft2d(const SpectrumField& field, const AdderConfig& cfg, FixedFormat fmt,
                 unsigned threads = 0);

/// ifft2d(fft2d(img)) with the same adder in both directions.
GrayImage reconstruct(const GrayImage& img, const AdderConfig& cfg, FixedFormat fmt,
                      unsigned threads = 0);

} // namespace axadd
