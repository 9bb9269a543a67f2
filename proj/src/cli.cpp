#include "axadd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "axadd/adders.hpp"
#include "axadd/error_metrics.hpp"
#include "axadd/fft.hpp"
#include "axadd/image.hpp"
#include "axadd/quality.hpp"
#include "axadd/report.hpp"

namespace axadd::cli {
namespace {

std::string bits2(unsigned v) { return {char('0' + ((v >> 1) & 1)), char('0' + (v & 1))}; }
std::string bits3(unsigned v) {
    return {char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)), char('0' + (v & 1))};
}

std::string emit(const std::vector<ReportRow>& rows, ReportFormat format) {
    return format == ReportFormat::Csv ? to_csv(rows) : to_json(rows);
}

ReportRow stats_row(const AdderConfig& cfg, uint64_t samples, uint64_t seed, unsigned threads) {
    ReportRow row;
    row.kind = std::string(kind_name(cfg.kind));
    row.n = cfg.n;
    row.m = cfg.m;
    row.k = cfg.k;
    ErrorStats ex = exhaustive_lsm_stats(cfg, threads);
    row.med = ex.med;
    row.error_rate = ex.error_rate;
    row.max_ed = ex.max_ed;
    if (samples > 0) row.mred = monte_carlo_stats(cfg, samples, seed, threads).mred;
    return row;
}

} // namespace

std::string cmd_analyze(const AnalyzeOptions& opt) {
    AdderConfig cfg = validate_config({opt.kind, opt.n, opt.m, opt.k});
    ReportRow row = stats_row(cfg, opt.samples, opt.seed, opt.threads);
    row.transistors = transistor_count(build_netlist(cfg), CellCostTable::defaults());
    std::vector<ReportRow> rows{std::move(row)};
    return emit(rows, opt.format);
}

SweepResult cmd_sweep(const SweepOptions& opt) {
    if (opt.m_values.empty() || opt.k_values.empty())
        throw ConfigError("sweep: empty m or k range");
    SweepResult result;
    std::vector<ReportRow> rows;
    for (unsigned m : opt.m_values) {
        for (unsigned k : opt.k_values) {
            AdderConfig cfg{opt.kind, opt.n, m, k};
            try {
                validate_config(cfg);
            } catch (const ConfigError& e) {
                result.skipped.push_back(e.what());
                continue;
            }
            rows.push_back(stats_row(cfg, opt.samples, opt.seed, opt.threads));
        }
    }
    if (rows.empty()) throw ConfigError("sweep: no valid (m, k) combination in range");
    result.report = emit(rows, opt.format);
    return result;
}

std::string cmd_vectors(const VectorsOptions& opt) {
    std::vector<TruthTableRow> rows = lsm_truth_table_unordered(opt.kind);
    std::ostringstream out;
    if (opt.text) {
        out << "A   B   accurate  approx  erroneous\n";
        for (const TruthTableRow& r : rows)
            out << bits2(r.a_bits) << "  " << bits2(r.b_bits) << "  " << bits3(r.accurate)
                << "       " << bits3(r.approx) << "     " << (r.erroneous ? "yes" : "no")
                << '\n';
        size_t errs = static_cast<size_t>(
            std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.erroneous; }));
        out << "erroneous: " << errs << " of " << rows.size() << '\n';
        return out.str();
    }
    if (opt.format == ReportFormat::Json) {
        out << "[";
        bool first = true;
        for (const TruthTableRow& r : rows) {
            if (!first) out << ',';
            first = false;
            out << "\n  {\"a\":\"" << bits2(r.a_bits) << "\",\"b\":\"" << bits2(r.b_bits)
                << "\",\"accurate\":\"" << bits3(r.accurate) << "\",\"approx\":\""
                << bits3(r.approx) << "\",\"erroneous\":" << (r.erroneous ? "true" : "false")
                << '}';
        }
        out << "\n]\n";
        return out.str();
    }
    out << "a,b,accurate,approx,erroneous\n";
    for (const TruthTableRow& r : rows)
        out << bits2(r.a_bits) << ',' << bits2(r.b_bits) << ',' << bits3(r.accurate) << ','
            << bits3(r.approx) << ',' << (r.erroneous ? 1 : 0) << '\n';
    return out.str();
}

std::string cmd_cost(const CostOptions& opt) {
    AdderConfig cfg = validate_config({opt.kind, opt.n, opt.m, opt.k});
    CellCostTable costs = opt.cells_path ? parse_cell_costs(read_text_file(*opt.cells_path))
                                         : CellCostTable::defaults();
    Netlist nl = build_netlist(cfg, opt.msm);
    if (opt.netlist_path) {
        std::ofstream out(*opt.netlist_path);
        if (!out) throw ConfigError("cannot write netlist file: " + *opt.netlist_path);
        out << export_netlist(nl);
    }
    ReportRow row;
    row.kind = std::string(kind_name(cfg.kind));
    row.n = cfg.n;
    row.m = cfg.m;
    row.k = cfg.k;
    row.transistors = transistor_count(nl, costs);
    std::vector<ReportRow> rows{std::move(row)};
    return emit(rows, opt.format);
}

std::string cmd_image(const ImageOptions& opt) {
    AdderConfig cfg = validate_config({opt.kind, opt.n, opt.m, opt.k});
    GrayImage original = load_pgm_file(opt.input_path);
    FixedFormat fmt{opt.n, opt.frac_bits};
    GrayImage rebuilt = reconstruct(original, cfg, fmt, opt.threads);
    if (!opt.output_path.empty()) save_pgm_file(rebuilt, opt.output_path);
    QualityReport q = quality_report(original, rebuilt);
    std::ostringstream out;
    out << "psnr_db=" << format_g9(q.psnr_db) << '\n'
        << "ssim=" << format_g9(q.ssim) << '\n'
        << "label=" << label_name(q.label) << '\n';
    return out.str();
}

std::string cmd_tradeoff(const TradeoffOptions& opt) {
    std::vector<ReportRow> rows = parse_csv(read_text_file(opt.rows_path));
    std::map<std::string, double> energies =
        opt.energy_path ? parse_energy_file(read_text_file(*opt.energy_path))
                        : default_energies();
    if (rows.empty()) throw ConfigError("tradeoff: report has no rows");
    double max_energy = 0.0;
    std::vector<std::pair<const ReportRow*, double>> joined;
    for (const ReportRow& row : rows) {
        auto it = energies.find(row.kind);
        if (it == energies.end())
            throw ConfigError("tradeoff: no energy value for kind '" + row.kind + "'");
        if (!row.ssim)
            throw ConfigError("tradeoff: row for kind '" + row.kind + "' has no ssim");
        joined.emplace_back(&row, it->second);
        max_energy = std::max(max_energy, it->second);
    }
    std::ostringstream out;
    out << "kind,ssim,normalized_energy\n";
    for (auto& [row, energy] : joined)
        out << row->kind << ',' << format_g9(*row->ssim) << ',' << format_g9(energy / max_energy)
            << '\n';
    return out.str();
}

std::vector<unsigned> parse_range(const std::string& text) {
    std::vector<unsigned> out;
    if (text.find(':') != std::string::npos) {
        unsigned lo = 0, hi = 0, step = 1;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        in >> lo >> c1 >> hi;
        if (!in || c1 != ':') throw ConfigError("bad range '" + text + "' (want lo:hi[:step])");
        if (in >> c2 >> step) {
            if (c2 != ':' || step == 0) throw ConfigError("bad range step in '" + text + "'");
        }
        for (unsigned v = lo; v <= hi; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw ConfigError("bad range item '" + item + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw ConfigError("empty range '" + text + "'");
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace axadd::cli
