#include "axadd/fft.hpp"

#include <cmath>
#include <numbers>

#include "axadd/parallel.hpp"

namespace axadd {
namespace {

constexpr unsigned kUnshiftedStages = 6; // per-pass growth allowance, 2^6

bool is_pow2(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

unsigned log2u(unsigned v) {
    unsigned s = 0;
    while ((1u << s) < v) ++s;
    return s;
}

struct Twiddles {
    std::vector<int64_t> re, im; // N/2 entries at Q.frac
};

Twiddles make_twiddles(unsigned n_points, unsigned frac, bool inverse) {
    Twiddles tw;
    tw.re.resize(n_points / 2);
    tw.im.resize(n_points / 2);
    const double sign = inverse ? 2.0 : -2.0;
    const double scale = static_cast<double>(int64_t{1} << frac);
    for (unsigned j = 0; j < n_points / 2; ++j) {
        double ang = sign * std::numbers::pi * j / n_points;
        tw.re[j] = std::llround(std::cos(ang) * scale);
        tw.im[j] = std::llround(std::sin(ang) * scale);
    }
    return tw;
}

/// One 1-D pass over many lines with the adder injected into the butterflies.
class LineTransform {
public:
    LineTransform(const AdderConfig& cfg, FixedFormat fmt, unsigned n_points, bool inverse)
        : cfg_(cfg),
          n_(cfg.n),
          frac_(fmt.frac_bits),
          points_(n_points),
          stages_(log2u(n_points)),
          fwd_shifts_(stages_ > kUnshiftedStages ? stages_ - kUnshiftedStages : 0),
          inverse_(inverse),
          tw_(make_twiddles(n_points, fmt.frac_bits, inverse)) {
        sat_max_ = (int64_t{1} << (n_ - 1)) - 1;
        sat_min_ = -(int64_t{1} << (n_ - 1));
        rev_.resize(points_);
        for (unsigned i = 0; i < points_; ++i) {
            unsigned r = 0, v = i;
            for (unsigned s = 0; s < stages_; ++s) {
                r = (r << 1) | (v & 1);
                v >>= 1;
            }
            rev_[i] = r;
        }
    }

    void run(ComplexFx* line) const {
        for (unsigned i = 0; i < points_; ++i)
            if (rev_[i] > i) std::swap(line[i], line[rev_[i]]);
        for (unsigned stage = 0; stage < stages_; ++stage) {
            const unsigned size = 2u << stage;
            const unsigned half = size >> 1;
            const unsigned step = points_ / size;
            for (unsigned base = 0; base < points_; base += size) {
                for (unsigned j = 0; j < half; ++j) {
                    ComplexFx& lo = line[base + j];
                    ComplexFx& hi = line[base + j + half];
                    const int64_t wr = tw_.re[j * step];
                    const int64_t wi = tw_.im[j * step];
                    // exact complex multiplier (internal adds included)
                    int64_t tr = sat(round_shift(hi.re * wr - hi.im * wi, frac_));
                    int64_t ti = sat(round_shift(hi.re * wi + hi.im * wr, frac_));
                    int64_t ar = lo.re, ai = lo.im;
                    lo.re = add(ar, tr);
                    lo.im = add(ai, ti);
                    hi.re = add(ar, neg(tr));
                    hi.im = add(ai, neg(ti));
                }
            }
            if (shift_at(stage)) {
                for (unsigned i = 0; i < points_; ++i) {
                    line[i].re = round_shift(line[i].re, 1);
                    line[i].im = round_shift(line[i].im, 1);
                }
            }
        }
    }

private:
    bool shift_at(unsigned stage) const {
        if (!inverse_) return stage >= stages_ - fwd_shifts_;
        return stage < stages_ - fwd_shifts_;
    }

    // n-bit two's-complement add through the configured adder (wraps mod 2^n,
    // the hardware behaviour)
    int64_t add(int64_t x, int64_t y) const {
        Word a(static_cast<uint64_t>(x) & Word::mask(n_), n_);
        Word b(static_cast<uint64_t>(y) & Word::mask(n_), n_);
        uint64_t bits = approx_add(cfg_, a, b).bits;
        return sign_extend(bits);
    }

    // exact two's-complement negation
    int64_t neg(int64_t x) const {
        return sign_extend(static_cast<uint64_t>(-x) & Word::mask(n_));
    }

    int64_t sign_extend(uint64_t bits) const {
        uint64_t sign = uint64_t{1} << (n_ - 1);
        return static_cast<int64_t>((bits ^ sign)) - static_cast<int64_t>(sign);
    }

    static int64_t round_shift(int64_t v, unsigned sh) { // round half away from zero
        if (sh == 0) return v;
        const int64_t half = int64_t{1} << (sh - 1);
        return v >= 0 ? (v + half) >> sh : -((-v + half) >> sh);
    }

    int64_t sat(int64_t v) const { return v > sat_max_ ? sat_max_ : (v < sat_min_ ? sat_min_ : v); }

    AdderConfig cfg_;
    unsigned n_, frac_, points_, stages_, fwd_shifts_;
    bool inverse_;
    Twiddles tw_;
    std::vector<unsigned> rev_;
    int64_t sat_max_ = 0, sat_min_ = 0;
};

void validate_fft_args(unsigned width, unsigned height, const AdderConfig& cfg,
                       FixedFormat fmt) {
    validate_config(cfg);
    if (!is_pow2(width) || !is_pow2(height))
        throw ConfigError("fft2d: dimensions " + std::to_string(width) + "x" +
                          std::to_string(height) + " must be powers of two");
    if (fmt.total_bits != cfg.n)
        throw ConfigError("fixed format total_bits " + std::to_string(fmt.total_bits) +
                          " must equal adder width n=" + std::to_string(cfg.n));
    if (fmt.frac_bits == 0 || fmt.frac_bits >= fmt.total_bits)
        throw ConfigError("fixed format needs 0 < frac_bits < total_bits");
    if (fmt.total_bits - 1 + fmt.frac_bits > 62)
        throw ConfigError("fixed format too wide for the exact multiplier (total-1+frac <= 62)");
    unsigned growth = std::min(log2u(width), kUnshiftedStages) +
                      std::min(log2u(height), kUnshiftedStages);
    // DC bound: 255 * 2^kPixelScaleBits * 2^growth, plus two guard bits
    if (8 + kPixelScaleBits + growth + 2 > fmt.total_bits)
        throw ConfigError("fixed format too narrow for the DC term after scaling (need " +
                          std::to_string(8 + kPixelScaleBits + growth + 2) + " bits)");
}

// rows in place, then columns via gather/scatter
void transform2d(std::vector<ComplexFx>& data, unsigned width, unsigned height,
                 const AdderConfig& cfg, FixedFormat fmt, bool inverse, unsigned threads) {
    LineTransform rows(cfg, fmt, width, inverse);
    for_each_chunk(height, 8, threads, [&](uint64_t, uint64_t begin, uint64_t end) {
        for (uint64_t y = begin; y < end; ++y) rows.run(&data[y * width]);
    });
    LineTransform cols(cfg, fmt, height, inverse);
    for_each_chunk(width, 8, threads, [&](uint64_t, uint64_t begin, uint64_t end) {
        std::vector<ComplexFx> col(height);
        for (uint64_t x = begin; x < end; ++x) {
            for (unsigned y = 0; y < height; ++y) col[y] = data[static_cast<size_t>(y) * width + x];
            cols.run(col.data());
            for (unsigned y = 0; y < height; ++y) data[static_cast<size_t>(y) * width + x] = col[y];
        }
    });
}

} // namespace

SpectrumField fft2d(const GrayImage& img, const AdderConfig& cfg, FixedFormat fmt,
                    unsigned threads) {
    validate_fft_args(img.width, img.height, cfg, fmt);
    SpectrumField field;
    field.width = img.width;
    field.height = img.height;
    field.bins.resize(img.pixels.size());
    for (size_t i = 0; i < img.pixels.size(); ++i)
        field.bins[i] = {static_cast<int64_t>(img.pixels[i]) << kPixelScaleBits, 0};
    transform2d(field.bins, field.width, field.height, cfg, fmt, false, threads);
    return field;
}

GrayImage ifft2d(const SpectrumField& field, const AdderConfig& cfg, FixedFormat fmt,
                 unsigned threads) {
    validate_fft_args(field.width, field.height, cfg, fmt);
    std::vector<ComplexFx> data = field.bins;
    transform2d(data, field.width, field.height, cfg, fmt, true, threads);
    GrayImage img(field.width, field.height);
    const int64_t half = int64_t{1} << (kPixelScaleBits - 1);
    for (size_t i = 0; i < data.size(); ++i) {
        int64_t v = data[i].re;
        int64_t pixel = v >= 0 ? (v + half) >> kPixelScaleBits : -((-v + half) >> kPixelScaleBits);
        img.pixels[i] = static_cast<uint8_t>(pixel < 0 ? 0 : (pixel > 255 ? 255 : pixel));
    }
    return img;
}

GrayImage reconstruct(const GrayImage& img, const AdderConfig& cfg, FixedFormat fmt,
                      unsigned threads) {
    return ifft2d(fft2d(img, cfg, fmt, threads), cfg, fmt, threads);
}

} // namespace axadd
