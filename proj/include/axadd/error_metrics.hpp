#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "axadd/adders.hpp"

namespace axadd {

enum class StatsMode { ExhaustiveLsm, MonteCarlo };

/// MED, MRED, error rate and max ED for one configuration, plus sample
/// provenance. MRED is only defined in Monte-Carlo mode (it needs the full
/// accurate sum in the denominator).
struct ErrorStats {
    double med = 0.0;
    std::optional<double> mred;
    double error_rate = 0.0;
    uint64_t max_ed = 0;
    uint64_t sample_count = 0;
    StatsMode mode = StatsMode::ExhaustiveLsm;
    std::optional<uint64_t> seed;
    uint64_t mred_excluded = 0; // accurate-sum-zero samples kept out of the MRED mean
};

/// |exact - approximate| for one input pair; never wraps (sums keep bit n).
uint64_t error_distance(const AdderConfig& cfg, Word a, Word b);

/// Exact stats over the uniform input distribution, by enumerating all
/// 2^(2m) low-part pairs. ED depends only on the low m bits (the upper
/// section plus retained carry-out is exact given the speculated carry), so
/// these are the exact values random sampling estimates. Requires 2m <= 26.
ErrorStats exhaustive_lsm_stats(const AdderConfig& cfg, unsigned threads = 0);

/// Sampled stats from the deterministic counter-based stream; bit-identical
/// for fixed (cfg, samples, seed) regardless of worker count.
ErrorStats monte_carlo_stats(const AdderConfig& cfg, uint64_t samples, uint64_t seed,
                             unsigned threads = 0);

/// The comparison family in its usual reporting order, each with exhaustive
/// MED stats and Monte-Carlo MRED. k applies to the kinds with a constant
/// section (OLOCA, M-HERLOA, HALOC).
struct KindStats {
    AdderConfig cfg;
    ErrorStats stats;
};
std::vector<KindStats> table_error_report(unsigned n = 32, unsigned m = 10, unsigned k = 5,
                                          uint64_t samples = 10'000'000, uint64_t seed = 1,
                                          unsigned threads = 0);

/// The k actually used by a kind at a given partition (kinds without a
/// constant section run at k = 0).
unsigned kind_constant_width(AdderKind kind, unsigned k);

} // namespace axadd
