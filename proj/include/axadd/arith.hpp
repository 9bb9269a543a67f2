#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace axadd {

/// Thrown for invalid adder configurations, width mismatches and malformed
/// cost/energy tables.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A fixed-width binary word. The value is always masked to the width, so
/// `value < 2^width` holds at all times. Width 0 is the empty word (value 0),
/// which shows up as the degenerate half of a split.
struct Word {
    uint64_t value = 0;
    unsigned width = 0;

    Word() = default;
    Word(uint64_t v, unsigned w) : value(v & mask(w)), width(w) {
        if (w > 64) throw ConfigError("Word width " + std::to_string(w) + " exceeds 64");
    }

    uint64_t bit(unsigned i) const { return (value >> i) & 1u; }

    static constexpr uint64_t mask(unsigned w) {
        return w >= 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1;
    }

    bool operator==(const Word&) const = default;
};

enum class AdderKind {
    Exact,
    Loa,
    Loawa,
    Passthrough,
    Eta,
    Oloca,
    Herloa,
    Mherloa,
    Haloc,
};

constexpr std::array<AdderKind, 9> all_adder_kinds{
    AdderKind::Exact,   AdderKind::Loa,    AdderKind::Loawa,
    AdderKind::Passthrough, AdderKind::Eta, AdderKind::Oloca,
    AdderKind::Herloa,  AdderKind::Mherloa, AdderKind::Haloc,
};

std::string_view kind_name(AdderKind kind);
std::optional<AdderKind> kind_from_name(std::string_view name);

/// Selects an adder variant and its partition: n total bits, an m-bit
/// approximate low section of which the lowest k bits are constant ones.
struct AdderConfig {
    AdderKind kind = AdderKind::Exact;
    unsigned n = 32;
    unsigned m = 0;
    unsigned k = 0;

    bool operator==(const AdderConfig&) const = default;
};

/// Returns the config unchanged iff all structural invariants hold, else
/// throws ConfigError naming the offending field.
AdderConfig validate_config(const AdderConfig& cfg);

/// An (n+1)-bit sum: the low n bits plus the retained carry-out, so error
/// distances are defined without modular wrap.
struct AddResult {
    uint64_t bits = 0;  // low n bits
    bool carry = false; // bit n
    unsigned width = 0; // operand width n

    unsigned __int128 value() const {
        return (static_cast<unsigned __int128>(carry) << width) | bits;
    }

    bool operator==(const AddResult&) const = default;
};

/// Reference adder: sum with full carry, anchors every error measurement.
AddResult exact_add(Word a, Word b);

/// Splits into (hi, lo) with hi = floor(a / 2^m), lo = a mod 2^m.
std::pair<Word, Word> split_operand(Word a, unsigned m);

} // namespace axadd
