#include "axadd/arith.hpp"

#include <cctype>

namespace axadd {

std::string_view kind_name(AdderKind kind) {
    switch (kind) {
        case AdderKind::Exact: return "exact";
        case AdderKind::Loa: return "loa";
        case AdderKind::Loawa: return "loawa";
        case AdderKind::Passthrough: return "passthrough";
        case AdderKind::Eta: return "eta";
        case AdderKind::Oloca: return "oloca";
        case AdderKind::Herloa: return "herloa";
        case AdderKind::Mherloa: return "mherloa";
        case AdderKind::Haloc: return "haloc";
    }
    return "?";
}

std::optional<AdderKind> kind_from_name(std::string_view name) {
    std::string lower(name);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (AdderKind kind : all_adder_kinds)
        if (lower == kind_name(kind)) return kind;
    return std::nullopt;
}

AdderConfig validate_config(const AdderConfig& cfg) {
    const auto fail = [&](const std::string& why) {
        throw ConfigError("invalid config (" + std::string(kind_name(cfg.kind)) + ", n=" +
                          std::to_string(cfg.n) + ", m=" + std::to_string(cfg.m) + ", k=" +
                          std::to_string(cfg.k) + "): " + why);
    };
    if (cfg.n < 1 || cfg.n > 64) fail("n must be in [1, 64]");
    if (cfg.m > cfg.n) fail("m exceeds n");
    if (cfg.k > cfg.m) fail("k exceeds m");
    switch (cfg.kind) {
        case AdderKind::Exact:
            if (cfg.m != 0 || cfg.k != 0) fail("exact requires m = 0 and k = 0");
            break;
        case AdderKind::Loa:
        case AdderKind::Loawa:
        case AdderKind::Passthrough:
        case AdderKind::Eta:
            if (cfg.k != 0) fail("k must be 0 (no constant section)");
            break;
        case AdderKind::Oloca:
            break;
        case AdderKind::Herloa:
        case AdderKind::Mherloa:
        case AdderKind::Haloc:
            if (cfg.m != 0) {
                if (cfg.m < 2) fail("m must be 0 or at least 2");
                if (cfg.k > cfg.m - 2) fail("k must leave the two top LSM bits (k <= m-2)");
            }
            break;
    }
    return cfg;
}

AddResult exact_add(Word a, Word b) {
    if (a.width != b.width)
        throw ConfigError("exact_add width mismatch: " + std::to_string(a.width) + " vs " +
                          std::to_string(b.width));
    if (a.width == 0) throw ConfigError("exact_add requires width >= 1");
    unsigned __int128 sum = static_cast<unsigned __int128>(a.value) + b.value;
    return AddResult{static_cast<uint64_t>(sum) & Word::mask(a.width),
                     static_cast<bool>(sum >> a.width), a.width};
}

std::pair<Word, Word> split_operand(Word a, unsigned m) {
    if (m > a.width)
        throw ConfigError("split point " + std::to_string(m) + " exceeds width " +
                          std::to_string(a.width));
    Word lo(a.value & Word::mask(m), m);
    Word hi(m >= 64 ? 0 : (a.value >> m), a.width - m);
    return {hi, lo};
}

} // namespace axadd
