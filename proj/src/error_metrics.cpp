#include "axadd/error_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "axadd/parallel.hpp"
#include "axadd/rng.hpp"

namespace axadd {

uint64_t error_distance(const AdderConfig& cfg, Word a, Word b) {
    unsigned __int128 exact = exact_add(a, b).value();
    unsigned __int128 approx = approx_add(cfg, a, b).value();
    unsigned __int128 ed = exact > approx ? exact - approx : approx - exact;
    // ED is confined to the low section: bounded by 2^(m+1), so it fits.
    return static_cast<uint64_t>(ed);
}

ErrorStats exhaustive_lsm_stats(const AdderConfig& cfg, unsigned threads) {
    validate_config(cfg);
    if (2 * cfg.m > 26)
        throw ConfigError("exhaustive enumeration needs 2m <= 26 (m=" + std::to_string(cfg.m) +
                          "); use monte_carlo_stats for wider partitions");
    const uint64_t side = uint64_t{1} << cfg.m;
    const uint64_t total = side * side;

    struct Partial {
        uint64_t ed_sum = 0, err = 0, max_ed = 0;
    };
    const uint64_t chunk = std::min<uint64_t>(total, 1u << 16);
    std::vector<Partial> parts((total + chunk - 1) / chunk);
    for_each_chunk(total, chunk, threads, [&](uint64_t c, uint64_t begin, uint64_t end) {
        Partial p;
        for (uint64_t i = begin; i < end; ++i) {
            Word a(i / side, cfg.n), b(i % side, cfg.n);
            uint64_t ed = error_distance(cfg, a, b);
            p.ed_sum += ed;
            p.err += ed != 0;
            p.max_ed = std::max(p.max_ed, ed);
        }
        parts[c] = p;
    });

    uint64_t ed_sum = 0, err = 0, max_ed = 0;
    for (const Partial& p : parts) {
        ed_sum += p.ed_sum;
        err += p.err;
        max_ed = std::max(max_ed, p.max_ed);
    }
    ErrorStats s;
    s.med = static_cast<double>(ed_sum) / static_cast<double>(total);
    s.error_rate = static_cast<double>(err) / static_cast<double>(total);
    s.max_ed = max_ed;
    s.sample_count = total;
    s.mode = StatsMode::ExhaustiveLsm;
    return s;
}

ErrorStats monte_carlo_stats(const AdderConfig& cfg, uint64_t samples, uint64_t seed,
                             unsigned threads) {
    validate_config(cfg);
    if (samples < 1) throw ConfigError("monte_carlo_stats needs samples >= 1");
    const CounterRng rng{seed};
    const uint64_t wmask = Word::mask(cfg.n);

    struct Partial {
        unsigned __int128 ed_sum = 0;
        double red_sum = 0.0;
        uint64_t err = 0, max_ed = 0, excluded = 0;
    };
    const uint64_t chunk = std::min<uint64_t>(samples, 1u << 16);
    std::vector<Partial> parts((samples + chunk - 1) / chunk);
    for_each_chunk(samples, chunk, threads, [&](uint64_t c, uint64_t begin, uint64_t end) {
        Partial p;
        for (uint64_t i = begin; i < end; ++i) {
            Word a(rng.at(2 * i) & wmask, cfg.n);
            Word b(rng.at(2 * i + 1) & wmask, cfg.n);
            unsigned __int128 exact = exact_add(a, b).value();
            unsigned __int128 approx = approx_add(cfg, a, b).value();
            uint64_t ed =
                static_cast<uint64_t>(exact > approx ? exact - approx : approx - exact);
            p.ed_sum += ed;
            p.err += ed != 0;
            p.max_ed = std::max(p.max_ed, ed);
            if (exact == 0)
                ++p.excluded;
            else
                p.red_sum += static_cast<double>(ed) / static_cast<double>(exact);
        }
        parts[c] = p;
    });

    unsigned __int128 ed_sum = 0;
    double red_sum = 0.0;
    uint64_t err = 0, max_ed = 0, excluded = 0;
    for (const Partial& p : parts) { // chunk order: deterministic double sum
        ed_sum += p.ed_sum;
        red_sum += p.red_sum;
        err += p.err;
        max_ed = std::max(max_ed, p.max_ed);
        excluded += p.excluded;
    }
    ErrorStats s;
    s.med = static_cast<double>(ed_sum) / static_cast<double>(samples);
    uint64_t denom_count = samples - excluded;
    if (denom_count > 0) s.mred = red_sum / static_cast<double>(denom_count);
    s.error_rate = static_cast<double>(err) / static_cast<double>(samples);
    s.max_ed = max_ed;
    s.sample_count = samples;
    s.mode = StatsMode::MonteCarlo;
    s.seed = seed;
    s.mred_excluded = excluded;
    return s;
}

unsigned kind_constant_width(AdderKind kind, unsigned k) {
    switch (kind) {
        case AdderKind::Oloca:
        case AdderKind::Mherloa:
        case AdderKind::Haloc:
            return k;
        default:
            return 0;
    }
}

std::vector<KindStats> table_error_report(unsigned n, unsigned m, unsigned k, uint64_t samples,
                                          uint64_t seed, unsigned threads) {
    static constexpr AdderKind order[] = {AdderKind::Loa,    AdderKind::Loawa,
                                          AdderKind::Oloca,  AdderKind::Herloa,
                                          AdderKind::Mherloa, AdderKind::Haloc};
    std::vector<KindStats> out;
    out.reserve(std::size(order));
    for (AdderKind kind : order) {
        AdderConfig cfg{kind, n, m, kind_constant_width(kind, k)};
        validate_config(cfg);
        ErrorStats s = exhaustive_lsm_stats(cfg, threads);
        ErrorStats mc = monte_carlo_stats(cfg, samples, seed, threads);
        s.mred = mc.mred;
        s.mred_excluded = mc.mred_excluded;
        s.seed = seed;
        out.push_back({cfg, s});
    }
    return out;
}

} // namespace axadd
