#pragma once

#include <string_view>

#include "axadd/image.hpp"

namespace axadd {

/// 10*log10(255^2 / MSE); identical images return the 100.0 dB cap.
double psnr(const GrayImage& ref, const GrayImage& test);

/// Mean local SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// L=255. Both images must be at least 11x11.
double ssim(const GrayImage& ref, const GrayImage& test);

enum class QualityLabel { High, Acceptable, Low, Poor };

/// high: > 0.90; acceptable: (0.70, 0.90]; low: [0.30, 0.70]; poor: < 0.30.
QualityLabel quality_label(double ssim_value);
std::string_view label_name(QualityLabel label);

struct QualityReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
    QualityLabel label = QualityLabel::Poor;
};

QualityReport quality_report(const GrayImage& ref, const GrayImage& test);

} // namespace axadd
