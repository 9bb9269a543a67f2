#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "axadd/cli.hpp"
#include "axadd/error_metrics.hpp"
#include "axadd/image.hpp"
#include "axadd/report.hpp"
#include "support/synth_image.hpp"

using namespace axadd;
using namespace axadd::cli;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("axadd_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("format_g9 gives stable 9-significant-digit strings") {
    CHECK(format_g9(0.0) == "0");
    CHECK(format_g9(123.933655) == "123.933655");
    CHECK(format_g9(3.17758e-08) == "3.17758e-08");
    CHECK(format_g9(0.988464355) == "0.988464355");
    CHECK(format_g9(191.875) == "191.875");
}

TEST_CASE("CSV serialization round-trips") {
    ReportRow row;
    row.kind = "haloc";
    row.n = 32;
    row.m = 10;
    row.k = 5;
    row.med = 123.933655;
    row.error_rate = 0.988464355;
    row.max_ed = 767;
    row.transistors = 676;
    std::vector<ReportRow> rows{row};
    std::string csv = to_csv(rows);
    CHECK(csv.starts_with(std::string(kCsvHeader) + "\n"));
    CHECK(csv.find("haloc,32,10,5,123.933655,,0.988464355,767,676,,,,") != std::string::npos);

    std::vector<ReportRow> back = parse_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0].kind == "haloc");
    CHECK(back[0].med == 123.933655);
    CHECK(!back[0].mred.has_value());
    CHECK(back[0].max_ed == 767);

    CHECK_THROWS_WITH_AS(parse_csv("bogus\n"), doctest::Contains("unexpected header"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_csv(std::string(kCsvHeader) + "\nhaloc,1,2\n"),
                         doctest::Contains("13 fields"), ConfigError);
}

TEST_CASE("JSON mirrors the CSV fields with the same digit strings") {
    ReportRow row;
    row.kind = "loa";
    row.n = 32;
    row.m = 10;
    row.med = 191.875;
    std::vector<ReportRow> rows{row};
    std::string json = to_json(rows);
    CHECK(json.find("\"kind\":\"loa\"") != std::string::npos);
    CHECK(json.find("\"med\":191.875") != std::string::npos);
    CHECK(json.find("\"mred\":null") != std::string::npos);
    CHECK(json.find("\"normalized_energy\":null") != std::string::npos);
}

TEST_CASE("energy tables") {
    auto defaults = default_energies();
    CHECK(defaults.at("haloc") == 51.45);
    CHECK(defaults.at("exact") == 66.25);

    auto parsed = parse_energy_file("# lab values\nloa = 10.5\nhaloc=2.25\n");
    CHECK(parsed.size() == 2);
    CHECK(parsed.at("haloc") == 2.25);
    CHECK_THROWS_WITH_AS(parse_energy_file("bogus=1\n"), doctest::Contains("unknown kind"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_energy_file("# nothing\n"), doctest::Contains("no entries"),
                         ConfigError);
}

TEST_CASE("cmd_analyze is deterministic and reports the exact adder as error-free") {
    AnalyzeOptions opt;
    opt.kind = AdderKind::Exact;
    opt.n = 32;
    opt.m = 0;
    opt.k = 0;
    opt.samples = 10000;
    std::string a = cmd_analyze(opt);
    std::string b = cmd_analyze(opt);
    CHECK(a == b);
    CHECK(a.find("exact,32,0,0,0,0,0,0,") != std::string::npos);

    opt.format = ReportFormat::Json;
    std::string json = cmd_analyze(opt);
    CHECK(json.find("\"med\":0") != std::string::npos);
}

TEST_CASE("cmd_vectors counts erroneous rows per kind") {
    VectorsOptions opt;
    opt.kind = AdderKind::Loa;
    std::string loa = cmd_vectors(opt);
    CHECK(std::count(loa.begin(), loa.end(), '1') >= 5);
    size_t err_rows = 0;
    std::istringstream in(loa);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,b,accurate,approx,erroneous");
    while (std::getline(in, line)) err_rows += line.ends_with(",1");
    CHECK(err_rows == 5);

    opt.kind = AdderKind::Haloc;
    std::istringstream in2(cmd_vectors(opt));
    err_rows = 0;
    std::getline(in2, line);
    while (std::getline(in2, line)) err_rows += line.ends_with(",1");
    CHECK(err_rows == 1);

    opt.kind = AdderKind::Exact;
    std::istringstream in3(cmd_vectors(opt));
    err_rows = 0;
    std::getline(in3, line);
    while (std::getline(in3, line)) err_rows += line.ends_with(",1");
    CHECK(err_rows == 0);
}

TEST_CASE("cmd_sweep enumerates valid combinations and matches exhaustive stats") {
    SweepOptions opt;
    opt.kind = AdderKind::Haloc;
    opt.n = 16;
    opt.m_values = {0, 6, 8};
    opt.k_values = {0, 3};
    SweepResult result = cmd_sweep(opt);
    // m=0,k=3 is invalid (k > m), skipped
    CHECK(result.skipped.size() == 1);
    std::vector<ReportRow> rows = parse_csv(result.report);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].m == 0);
    CHECK(*rows[0].med == 0.0);
    for (const ReportRow& row : rows) {
        AdderConfig cfg{AdderKind::Haloc, 16, row.m, row.k};
        // CSV carries 9 significant digits
        CHECK(*row.med == doctest::Approx(exhaustive_lsm_stats(cfg).med).epsilon(1e-8));
    }
    // sorted by (m, k)
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK((rows[i - 1].m < rows[i].m ||
               (rows[i - 1].m == rows[i].m && rows[i - 1].k < rows[i].k)));

    opt.m_values = {1};
    opt.k_values = {0};
    CHECK_THROWS_WITH_AS(cmd_sweep(opt), doctest::Contains("no valid"), ConfigError);
}

TEST_CASE("cmd_cost honours custom cell tables and dumps netlists") {
    auto cells = temp_file("cells.txt");
    write_file(cells, "INV=2\nAND2=6\nOR2=6\nNAND2=4\nNOR2=4\nXOR2=12\nXNOR2=12\nHA=18\nFA=1\nTIE1=0\nTIE0=0\n");
    auto dump = temp_file("netlist.txt");

    CostOptions opt;
    opt.kind = AdderKind::Exact;
    opt.n = 4;
    opt.m = 0;
    opt.k = 0;
    opt.cells_path = cells.string();
    opt.netlist_path = dump.string();
    std::string report = cmd_cost(opt);
    CHECK(report.find("exact,4,0,0,,,,,4,") != std::string::npos); // 4 FA at cost 1

    std::ifstream in(dump);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("FA") != std::string::npos);
    std::filesystem::remove(cells);
    std::filesystem::remove(dump);
}

TEST_CASE("cmd_image reconstructs and reports quality") {
    auto in_path = temp_file("scene.pgm");
    auto out_path = temp_file("rebuilt.pgm");
    GrayImage img = testsupport::synth_scene(64, 21);
    save_pgm_file(img, in_path.string());

    ImageOptions opt;
    opt.input_path = in_path.string();
    opt.output_path = out_path.string();
    opt.kind = AdderKind::Exact;
    opt.n = 32;
    opt.m = 0;
    opt.k = 0;
    std::string report = cmd_image(opt);
    CHECK(report.find("ssim=") != std::string::npos);
    CHECK(report.find("label=high") != std::string::npos);

    GrayImage rebuilt = load_pgm_file(out_path.string());
    CHECK(rebuilt.width == 64);

    ImageOptions bad = opt;
    bad.input_path = "/nonexistent/missing.pgm";
    CHECK_THROWS_AS(cmd_image(bad), PgmError);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("cmd_image rejects non-power-of-two inputs") {
    auto in_path = temp_file("odd.pgm");
    save_pgm_file(GrayImage(100, 100, 10), in_path.string());
    ImageOptions opt;
    opt.input_path = in_path.string();
    opt.kind = AdderKind::Exact;
    opt.n = 32;
    CHECK_THROWS_WITH_AS(cmd_image(opt), doctest::Contains("powers of two"), ConfigError);
    std::filesystem::remove(in_path);
}

TEST_CASE("cmd_tradeoff joins ssim rows with energies") {
    auto rows_path = temp_file("rows.csv");
    ReportRow exact, haloc, herloa;
    exact.kind = "exact";
    exact.ssim = 0.999;
    haloc.kind = "haloc";
    haloc.ssim = 0.92;
    herloa.kind = "herloa";
    herloa.ssim = 0.94;
    std::vector<ReportRow> rows{exact, herloa, haloc};
    write_file(rows_path, to_csv(rows));

    TradeoffOptions opt;
    opt.rows_path = rows_path.string();
    std::string out = cmd_tradeoff(opt);
    CHECK(out.starts_with("kind,ssim,normalized_energy\n"));
    CHECK(out.find("exact,0.999,1\n") != std::string::npos); // 66.25 is the max
    CHECK(out.find("haloc,0.92,0.776603774\n") != std::string::npos); // 51.45/66.25

    // the minimum normalized energy belongs to haloc
    std::istringstream in(out);
    std::string line;
    std::getline(in, line);
    double min_energy = 1e9;
    std::string min_kind;
    while (std::getline(in, line)) {
        auto p1 = line.find(','), p2 = line.rfind(',');
        double e = std::stod(line.substr(p2 + 1));
        if (e < min_energy) {
            min_energy = e;
            min_kind = line.substr(0, p1);
        }
    }
    CHECK(min_kind == "haloc");

    // all-equal custom energies normalize to 1.0
    auto energy_path = temp_file("energy.txt");
    write_file(energy_path, "exact=5\nhaloc=5\nherloa=5\n");
    opt.energy_path = energy_path.string();
    std::string flat = cmd_tradeoff(opt);
    std::istringstream in2(flat);
    std::getline(in2, line);
    while (std::getline(in2, line)) CHECK(line.ends_with(",1"));

    // a row whose kind has no energy entry is a join error
    write_file(energy_path, "exact=5\n");
    CHECK_THROWS_WITH_AS(cmd_tradeoff(opt), doctest::Contains("no energy value"), ConfigError);

    // rows without ssim cannot join
    ReportRow no_ssim;
    no_ssim.kind = "loa";
    std::vector<ReportRow> bad{no_ssim};
    write_file(rows_path, to_csv(bad));
    opt.energy_path.reset();
    CHECK_THROWS_WITH_AS(cmd_tradeoff(opt), doctest::Contains("no ssim"), ConfigError);

    std::filesystem::remove(rows_path);
    std::filesystem::remove(energy_path);
}

TEST_CASE("parse_range grammars") {
    CHECK(parse_range("8,10,12") == std::vector<unsigned>{8, 10, 12});
    CHECK(parse_range("4:6") == std::vector<unsigned>{4, 5, 6});
    CHECK(parse_range("0:10:5") == std::vector<unsigned>{0, 5, 10});
    CHECK(parse_range("7") == std::vector<unsigned>{7});
    CHECK_THROWS_AS(parse_range(""), std::exception);
    CHECK_THROWS_AS(parse_range("4:2:0"), ConfigError);
}
