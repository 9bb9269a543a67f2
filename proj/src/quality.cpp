#include "axadd/quality.hpp"

#include <array>
#include <cmath>

#include "axadd/arith.hpp"

namespace axadd {
namespace {

constexpr unsigned kWindow = 11;
constexpr double kSigma = 1.5;

std::array<double, kWindow> gaussian_taps() {
    std::array<double, kWindow> taps{};
    double sum = 0.0;
    for (unsigned i = 0; i < kWindow; ++i) {
        double d = static_cast<double>(i) - (kWindow - 1) / 2.0;
        taps[i] = std::exp(-(d * d) / (2.0 * kSigma * kSigma));
        sum += taps[i];
    }
    for (double& t : taps) t /= sum;
    return taps;
}

// separable valid-mode convolution with the gaussian taps
std::vector<double> blur_valid(const std::vector<double>& src, unsigned w, unsigned h,
                               unsigned& ow, unsigned& oh) {
    static const std::array<double, kWindow> taps = gaussian_taps();
    ow = w - kWindow + 1;
    oh = h - kWindow + 1;
    std::vector<double> horiz(static_cast<size_t>(ow) * h);
    for (unsigned y = 0; y < h; ++y)
        for (unsigned x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (unsigned t = 0; t < kWindow; ++t) acc += taps[t] * src[static_cast<size_t>(y) * w + x + t];
            horiz[static_cast<size_t>(y) * ow + x] = acc;
        }
    std::vector<double> out(static_cast<size_t>(ow) * oh);
    for (unsigned y = 0; y < oh; ++y)
        for (unsigned x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (unsigned t = 0; t < kWindow; ++t) acc += taps[t] * horiz[static_cast<size_t>(y + t) * ow + x];
            out[static_cast<size_t>(y) * ow + x] = acc;
        }
    return out;
}

void require_same_dims(const GrayImage& ref, const GrayImage& test, const char* op) {
    if (ref.width != test.width || ref.height != test.height)
        throw ConfigError(std::string(op) + ": dimension mismatch " + std::to_string(ref.width) +
                          "x" + std::to_string(ref.height) + " vs " + std::to_string(test.width) +
                          "x" + std::to_string(test.height));
}

} // namespace

double psnr(const GrayImage& ref, const GrayImage& test) {
    require_same_dims(ref, test, "psnr");
    double sq = 0.0;
    for (size_t i = 0; i < ref.pixels.size(); ++i) {
        double d = static_cast<double>(ref.pixels[i]) - test.pixels[i];
        sq += d * d;
    }
    double mse = sq / static_cast<double>(ref.pixels.size());
    if (mse == 0.0) return 100.0;
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const GrayImage& ref, const GrayImage& test) {
    require_same_dims(ref, test, "ssim");
    if (ref.width < kWindow || ref.height < kWindow)
        throw ConfigError("ssim: images must be at least 11x11");

    const size_t count = ref.pixels.size();
    std::vector<double> x(count), y(count), xx(count), yy(count), xy(count);
    for (size_t i = 0; i < count; ++i) {
        x[i] = ref.pixels[i];
        y[i] = test.pixels[i];
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }
    unsigned ow = 0, oh = 0;
    std::vector<double> mx = blur_valid(x, ref.width, ref.height, ow, oh);
    std::vector<double> my = blur_valid(y, ref.width, ref.height, ow, oh);
    std::vector<double> mxx = blur_valid(xx, ref.width, ref.height, ow, oh);
    std::vector<double> myy = blur_valid(yy, ref.width, ref.height, ow, oh);
    std::vector<double> mxy = blur_valid(xy, ref.width, ref.height, ow, oh);

    constexpr double c1 = (0.01 * 255) * (0.01 * 255);
    constexpr double c2 = (0.03 * 255) * (0.03 * 255);
    double total = 0.0;
    const size_t n = static_cast<size_t>(ow) * oh;
    for (size_t i = 0; i < n; ++i) {
        double vx = mxx[i] - mx[i] * mx[i];
        double vy = myy[i] - my[i] * my[i];
        double cxy = mxy[i] - mx[i] * my[i];
        total += ((2 * mx[i] * my[i] + c1) * (2 * cxy + c2)) /
                 ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
    }
    return total / static_cast<double>(n);
}

QualityLabel quality_label(double s) {
    if (s > 0.90) return QualityLabel::High;
    if (s > 0.70) return QualityLabel::Acceptable;
    if (s >= 0.30) return QualityLabel::Low;
    return QualityLabel::Poor;
}

std::string_view label_name(QualityLabel label) {
    switch (label) {
        case QualityLabel::High: return "high";
        case QualityLabel::Acceptable: return "acceptable";
        case QualityLabel::Low: return "low";
        case QualityLabel::Poor: return "poor";
    }
    return "?";
}

QualityReport quality_report(const GrayImage& ref, const GrayImage& test) {
    double s = ssim(ref, test);
    return QualityReport{psnr(ref, test), s, quality_label(s)};
}

} // namespace axadd
