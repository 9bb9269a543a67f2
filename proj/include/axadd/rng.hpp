#pragma once

#include <cstdint>

namespace axadd {

/// splitmix64 finalizer: the counter-based core of the sampling streams.
constexpr uint64_t splitmix64_mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Pure function of (seed, index): a stream that can be split at any chunk
/// boundary with bit-identical results regardless of worker count.
struct CounterRng {
    uint64_t seed = 0;

    uint64_t at(uint64_t index) const {
        return splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
    }
};

} // namespace axadd
