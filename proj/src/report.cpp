#include "axadd/report.hpp"

#include <cstdio>
#include <sstream>

namespace axadd {
namespace {

std::string opt_num(const std::optional<double>& v) { return v ? format_g9(*v) : ""; }
std::string opt_int(const std::optional<uint64_t>& v) { return v ? std::to_string(*v) : ""; }

void json_field(std::ostringstream& out, const char* name, const std::string& value,
                bool quote, bool& first) {
    if (!first) out << ',';
    first = false;
    out << '"' << name << "\":";
    if (value.empty())
        out << "null";
    else if (quote)
        out << '"' << value << '"';
    else
        out << value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string to_csv(std::span<const ReportRow> rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ReportRow& r : rows) {
        out << r.kind << ',' << r.n << ',' << r.m << ',' << r.k << ',' << opt_num(r.med) << ','
            << opt_num(r.mred) << ',' << opt_num(r.error_rate) << ',' << opt_int(r.max_ed) << ','
            << opt_int(r.transistors) << ',' << opt_num(r.ssim) << ',' << opt_num(r.psnr) << ','
            << opt_num(r.energy_fj) << ',' << opt_num(r.normalized_energy) << '\n';
    }
    return out.str();
}

std::string to_json(std::span<const ReportRow> rows) {
    std::ostringstream out;
    out << "[";
    bool first_row = true;
    for (const ReportRow& r : rows) {
        if (!first_row) out << ',';
        first_row = false;
        out << "\n  {";
        bool first = true;
        json_field(out, "kind", r.kind, true, first);
        json_field(out, "n", std::to_string(r.n), false, first);
        json_field(out, "m", std::to_string(r.m), false, first);
        json_field(out, "k", std::to_string(r.k), false, first);
        json_field(out, "med", opt_num(r.med), false, first);
        json_field(out, "mred", opt_num(r.mred), false, first);
        json_field(out, "error_rate", opt_num(r.error_rate), false, first);
        json_field(out, "max_ed", opt_int(r.max_ed), false, first);
        json_field(out, "transistors", opt_int(r.transistors), false, first);
        json_field(out, "ssim", opt_num(r.ssim), false, first);
        json_field(out, "psnr", opt_num(r.psnr), false, first);
        json_field(out, "energy_fj", opt_num(r.energy_fj), false, first);
        json_field(out, "normalized_energy", opt_num(r.normalized_energy), false, first);
        out << '}';
    }
    out << "\n]\n";
    return out.str();
}

std::vector<ReportRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("report CSV: empty input");
    if (line.ends_with('\r')) line.pop_back();
    if (line != kCsvHeader) throw ConfigError("report CSV: unexpected header '" + line + "'");
    std::vector<ReportRow> rows;
    unsigned line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.ends_with('\r')) line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f = split(line, ',');
        if (f.size() != 13)
            throw ConfigError("report CSV line " + std::to_string(line_no) + ": want 13 fields, got " +
                              std::to_string(f.size()));
        ReportRow r;
        r.kind = f[0];
        r.n = static_cast<unsigned>(std::stoul(f[1]));
        r.m = static_cast<unsigned>(std::stoul(f[2]));
        r.k = static_cast<unsigned>(std::stoul(f[3]));
        auto num = [&](const std::string& s) -> std::optional<double> {
            if (s.empty()) return std::nullopt;
            return std::stod(s);
        };
        auto integer = [&](const std::string& s) -> std::optional<uint64_t> {
            if (s.empty()) return std::nullopt;
            return std::stoull(s);
        };
        r.med = num(f[4]);
        r.mred = num(f[5]);
        r.error_rate = num(f[6]);
        r.max_ed = integer(f[7]);
        r.transistors = integer(f[8]);
        r.ssim = num(f[9]);
        r.psnr = num(f[10]);
        r.energy_fj = num(f[11]);
        r.normalized_energy = num(f[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::map<std::string, double> default_energies() {
    return {
        {"exact", 66.25}, {"loa", 55.05},     {"loawa", 53.42}, {"oloca", 51.71},
        {"herloa", 60.04}, {"mherloa", 52.92}, {"haloc", 51.45},
    };
}

std::map<std::string, double> parse_energy_file(const std::string& text) {
    std::map<std::string, double> out;
    std::istringstream in(text);
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("energy file line " + std::to_string(line_no) +
                              ": expected kind=value_fJ");
        std::string key = line.substr(0, eq);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        if (!kind_from_name(key))
            throw ConfigError("energy file line " + std::to_string(line_no) + ": unknown kind '" +
                              key + "'");
        double v = std::stod(line.substr(eq + 1));
        if (v <= 0)
            throw ConfigError("energy file line " + std::to_string(line_no) +
                              ": energy must be positive");
        out[key] = v;
    }
    if (out.empty()) throw ConfigError("energy file: no entries");
    return out;
}

} // namespace axadd
