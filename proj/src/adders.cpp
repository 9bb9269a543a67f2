#include "axadd/adders.hpp"

namespace axadd {
namespace {

struct LsmResult {
    uint64_t sum;  // low m bits
    uint64_t cin;  // carry speculated into the upper section
};

inline uint64_t bit(uint64_t v, unsigned i) { return (v >> i) & 1u; }

// Lower-part rules. a, b are the m-bit low parts; m >= 1.
LsmResult lsm_add(const AdderConfig& cfg, uint64_t a, uint64_t b) {
    const unsigned m = cfg.m;
    const unsigned k = cfg.k;
    const uint64_t ones = Word::mask(k);
    const uint64_t or_bits = a | b;

    switch (cfg.kind) {
        case AdderKind::Exact:
            break; // unreachable: exact always has m = 0
        case AdderKind::Loa:
            return {or_bits, bit(a, m - 1) & bit(b, m - 1)};
        case AdderKind::Loawa:
            return {or_bits, 0};
        case AdderKind::Passthrough:
            return {a, 0};
        case AdderKind::Eta: {
            // Standard addition from the top until the first (1,1) pair; that
            // position and everything below saturates to ones.
            uint64_t gen = a & b;
            if (gen == 0) return {a ^ b, 0};
            unsigned first = 63u - static_cast<unsigned>(__builtin_clzll(gen));
            uint64_t low_ones = Word::mask(first + 1);
            return {((a ^ b) & ~low_ones) | low_ones, 0};
        }
        case AdderKind::Oloca:
            return {ones | (or_bits & ~ones), bit(a, m - 1) & bit(b, m - 1)};
        case AdderKind::Haloc: {
            // Constant ones, an OR row up to bit m-3, and two half-adders on
            // the top pairs; the low HA carry predicts S_{m-1}, the high HA
            // carry feeds the accurate section.
            uint64_t xt = bit(a, m - 1) ^ bit(b, m - 1);
            uint64_t gt = bit(a, m - 1) & bit(b, m - 1);
            uint64_t xs = bit(a, m - 2) ^ bit(b, m - 2);
            uint64_t gs = bit(a, m - 2) & bit(b, m - 2);
            uint64_t row = m >= 3 ? (or_bits & Word::mask(m - 2) & ~ones) : 0;
            uint64_t s = ones | row | (xs << (m - 2)) | ((xt | gs) << (m - 1));
            return {s, gt};
        }
        case AdderKind::Herloa:
        case AdderKind::Mherloa: {
            // Hybrid error reduction: the top two pairs get carry-prediction
            // logic, and the OR row is pulled high when the upper pair takes
            // the carry while the next pair propagates (the ripple path the
            // approximation cannot deliver).
            uint64_t xt = bit(a, m - 1) ^ bit(b, m - 1);
            uint64_t gt = bit(a, m - 1) & bit(b, m - 1);
            uint64_t xs = bit(a, m - 2) ^ bit(b, m - 2);
            uint64_t gs = bit(a, m - 2) & bit(b, m - 2);
            uint64_t boost = (gt & xs) ? Word::mask(m - 2) & ~ones : 0;
            uint64_t row = m >= 3 ? ((or_bits & Word::mask(m - 2) & ~ones) | boost) : 0;
            uint64_t s = ones | row | ((xs | (gs & xt)) << (m - 2)) |
                         ((xt | gs) << (m - 1));
            return {s, gt};
        }
    }
    throw ConfigError("unknown adder kind");
}

} // namespace

AddResult approx_add(const AdderConfig& cfg, Word a, Word b) {
    validate_config(cfg);
    if (a.width != cfg.n || b.width != cfg.n)
        throw ConfigError("approx_add width mismatch: operands " + std::to_string(a.width) +
                          "/" + std::to_string(b.width) + " vs n=" + std::to_string(cfg.n));
    if (cfg.m == 0) return exact_add(a, b);

    const unsigned m = cfg.m;
    LsmResult lo = lsm_add(cfg, a.value & Word::mask(m), b.value & Word::mask(m));
    const uint64_t hi_a = m >= 64 ? 0 : a.value >> m;
    const uint64_t hi_b = m >= 64 ? 0 : b.value >> m;
    unsigned __int128 hi = static_cast<unsigned __int128>(hi_a) + hi_b + lo.cin;
    unsigned __int128 sum = (hi << m) | lo.sum;
    return AddResult{static_cast<uint64_t>(sum) & Word::mask(cfg.n),
                     static_cast<bool>(sum >> cfg.n), cfg.n};
}

std::vector<TruthTableRow> lsm_truth_table(AdderKind kind) {
    AdderConfig cfg{kind, 2, 2, 0};
    if (kind == AdderKind::Exact) cfg = AdderConfig{kind, 2, 0, 0};
    validate_config(cfg);
    std::vector<TruthTableRow> rows;
    rows.reserve(16);
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            unsigned accurate = a + b;
            unsigned approx =
                static_cast<unsigned>(approx_add(cfg, Word(a, 2), Word(b, 2)).value());
            rows.push_back({a, b, accurate, approx, approx != accurate});
        }
    return rows;
}

std::vector<TruthTableRow> lsm_truth_table_unordered(AdderKind kind) {
    std::vector<TruthTableRow> out;
    out.reserve(10);
    for (const TruthTableRow& row : lsm_truth_table(kind))
        if (row.b_bits <= row.a_bits) out.push_back(row);
    return out;
}

bool kind_is_commutative(AdderKind kind) { return kind != AdderKind::Passthrough; }

} // namespace axadd
