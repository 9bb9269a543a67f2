#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axadd/arith.hpp"
#include "axadd/netlist.hpp"

namespace axadd::cli {

enum class ReportFormat { Csv, Json };

struct AnalyzeOptions {
    AdderKind kind = AdderKind::Exact;
    unsigned n = 32, m = 0, k = 0;
    uint64_t samples = 10'000'000;
    uint64_t seed = 1;
    ReportFormat format = ReportFormat::Csv;
    unsigned threads = 0;
};
std::string cmd_analyze(const AnalyzeOptions& opt);

struct SweepOptions {
    AdderKind kind = AdderKind::Haloc;
    unsigned n = 32;
    std::vector<unsigned> m_values;
    std::vector<unsigned> k_values;
    uint64_t samples = 0; // 0: exhaustive stats only
    uint64_t seed = 1;
    ReportFormat format = ReportFormat::Csv;
    unsigned threads = 0;
};
struct SweepResult {
    std::string report;
    std::vector<std::string> skipped; // invalid combinations with reasons
};
SweepResult cmd_sweep(const SweepOptions& opt);

struct VectorsOptions {
    AdderKind kind = AdderKind::Haloc;
    ReportFormat format = ReportFormat::Csv;
    bool text = false; // aligned table instead of CSV
};
std::string cmd_vectors(const VectorsOptions& opt);

struct CostOptions {
    AdderKind kind = AdderKind::Haloc;
    unsigned n = 32, m = 0, k = 0;
    MsmStyle msm = MsmStyle::Ripple;
    std::optional<std::string> cells_path;
    std::optional<std::string> netlist_path; // dump the gate list here
    ReportFormat format = ReportFormat::Csv;
};
std::string cmd_cost(const CostOptions& opt);

struct ImageOptions {
    std::string input_path;
    std::string output_path;
    AdderKind kind = AdderKind::Haloc;
    unsigned n = 32, m = 0, k = 0;
    unsigned frac_bits = 15;
    unsigned threads = 0;
};
std::string cmd_image(const ImageOptions& opt);

struct TradeoffOptions {
    std::string rows_path;
    std::optional<std::string> energy_path; // default: published constants
};
std::string cmd_tradeoff(const TradeoffOptions& opt);

/// Range grammar for sweep flags: "8,10,12" or "lo:hi[:step]".
std::vector<unsigned> parse_range(const std::string& text);

std::string read_text_file(const std::string& path);

} // namespace axadd::cli
