#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axadd/arith.hpp"

namespace axadd {

/// One line of the analysis reports. Every populated numeric field traces to
/// one operation; energy values are ingested published constants, never
/// computed here.
struct ReportRow {
    std::string kind;
    unsigned n = 0, m = 0, k = 0;
    std::optional<double> med, mred, error_rate;
    std::optional<uint64_t> max_ed;
    std::optional<uint64_t> transistors;
    std::optional<double> ssim, psnr;
    std::optional<double> energy_fj, normalized_energy;
};

/// Fixed 9-significant-digit formatting; keeps every report byte-stable.
std::string format_g9(double v);

inline constexpr std::string_view kCsvHeader =
    "kind,n,m,k,med,mred,error_rate,max_ed,transistors,ssim,psnr,energy_fj,normalized_energy";

std::string to_csv(std::span<const ReportRow> rows);
/// Same fields one-to-one, numbers rendered with the same %.9g strings.
std::string to_json(std::span<const ReportRow> rows);

std::vector<ReportRow> parse_csv(const std::string& text);

/// Published per-kind average switching energies (fJ); reference constants
/// carried as external data.
std::map<std::string, double> default_energies();
std::map<std::string, double> parse_energy_file(const std::string& text);

} // namespace axadd
