// axadd: error analysis, gate-level cost estimation and fixed-point FFT
// image-quality evaluation for lower-part approximate adders.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "axadd/cli.hpp"

namespace {

using namespace axadd;
using namespace axadd::cli;

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + out_path);
    out << text;
}

AdderKind parse_kind(const std::string& name) {
    if (auto kind = kind_from_name(name)) return *kind;
    throw ConfigError("unknown adder kind '" + name +
                      "' (exact, loa, loawa, passthrough, eta, oloca, herloa, mherloa, haloc)");
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw ConfigError("unknown format '" + name + "' (csv, json)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate adder analysis toolkit"};
    app.require_subcommand(1);

    std::string kind = "haloc", format = "csv", out_path;
    unsigned n = 32, m = 0, k = 0, frac_bits = 15;
    uint64_t samples = 10'000'000, seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_partition = true) {
        cmd->add_option("--kind", kind, "adder kind");
        if (with_partition) {
            cmd->add_option("--n", n, "total width");
            cmd->add_option("--m", m, "approximate LSM width");
            cmd->add_option("--k", k, "constant-ones width");
        }
        cmd->add_option("--out", out_path, "write the report to this path");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "error stats and cost for one config");
    add_common(analyze);
    analyze->add_option("--samples", samples, "Monte-Carlo sample count for MRED");
    analyze->add_option("--seed", seed, "Monte-Carlo seed");
    analyze->add_option("--format", format, "csv or json");

    CLI::App* sweep = app.add_subcommand("sweep", "error stats across (m, k) ranges");
    std::string m_range, k_range = "0";
    add_common(sweep, false);
    sweep->add_option("--n", n, "total width");
    sweep->add_option("--m", m_range, "m values: list 8,10,12 or lo:hi[:step]")->required();
    sweep->add_option("--k", k_range, "k values: list or lo:hi[:step]");
    sweep->add_option("--samples", samples, "Monte-Carlo samples (0 = exhaustive only)")
        ->default_val("0");
    sweep->add_option("--seed", seed, "Monte-Carlo seed");
    sweep->add_option("--format", format, "csv or json");

    CLI::App* vectors = app.add_subcommand("vectors", "two-MSB truth table of the LSM");
    bool vectors_text = false;
    vectors->add_option("--kind", kind, "adder kind");
    vectors->add_option("--format", format, "csv or json");
    vectors->add_flag("--text", vectors_text, "aligned table instead of CSV");
    vectors->add_option("--out", out_path, "write the table to this path");

    CLI::App* cost = app.add_subcommand("cost", "gate-level transistor estimate");
    std::string cells_path, msm = "ripple", netlist_path;
    add_common(cost);
    cost->add_option("--cells", cells_path, "cell cost table file (OP=count lines)");
    cost->add_option("--msm", msm, "accurate-section style: ripple or lookahead");
    cost->add_option("--netlist", netlist_path, "dump the gate list to this path");
    cost->add_option("--format", format, "csv or json");

    CLI::App* image = app.add_subcommand("image", "FFT/IFFT reconstruction experiment");
    std::string input_path, output_path;
    add_common(image);
    image->add_option("input", input_path, "input PGM (P5 or P2, power-of-two dims)")->required();
    image->add_option("--frac-bits", frac_bits, "fixed-point fractional bits");
    image->add_option("--output", output_path, "write the reconstructed PGM here");

    CLI::App* tradeoff = app.add_subcommand("tradeoff", "SSIM vs normalized switching energy");
    std::string rows_path, energy_path;
    tradeoff->add_option("--rows", rows_path, "report CSV with ssim rows")->required();
    tradeoff->add_option("--energy", energy_path, "kind=value_fJ file (default: published)");
    tradeoff->add_option("--out", out_path, "write the report to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            AnalyzeOptions opt{parse_kind(kind), n, m, k, samples, seed, parse_format(format)};
            write_out(cmd_analyze(opt), out_path);
        } else if (sweep->parsed()) {
            SweepOptions opt;
            opt.kind = parse_kind(kind);
            opt.n = n;
            opt.m_values = parse_range(m_range);
            opt.k_values = parse_range(k_range);
            opt.samples = samples;
            opt.seed = seed;
            opt.format = parse_format(format);
            SweepResult result = cmd_sweep(opt);
            for (const std::string& note : result.skipped)
                std::cerr << "skipped: " << note << '\n';
            write_out(result.report, out_path);
        } else if (vectors->parsed()) {
            VectorsOptions opt{parse_kind(kind), parse_format(format), vectors_text};
            write_out(cmd_vectors(opt), out_path);
        } else if (cost->parsed()) {
            CostOptions opt;
            opt.kind = parse_kind(kind);
            opt.n = n;
            opt.m = m;
            opt.k = k;
            if (msm == "ripple")
                opt.msm = MsmStyle::Ripple;
            else if (msm == "lookahead")
                opt.msm = MsmStyle::Lookahead;
            else
                throw ConfigError("unknown msm style '" + msm + "' (ripple, lookahead)");
            if (!cells_path.empty()) opt.cells_path = cells_path;
            if (!netlist_path.empty()) opt.netlist_path = netlist_path;
            opt.format = parse_format(format);
            write_out(cmd_cost(opt), out_path);
        } else if (image->parsed()) {
            ImageOptions opt;
            opt.input_path = input_path;
            opt.output_path = output_path;
            opt.kind = parse_kind(kind);
            opt.n = n;
            opt.m = m;
            opt.k = k;
            opt.frac_bits = frac_bits;
            write_out(cmd_image(opt), out_path);
        } else if (tradeoff->parsed()) {
            TradeoffOptions opt;
            opt.rows_path = rows_path;
            if (!energy_path.empty()) opt.energy_path = energy_path;
            write_out(cmd_tradeoff(opt), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
