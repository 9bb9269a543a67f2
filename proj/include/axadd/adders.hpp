#pragma once

#include <vector>

#include "axadd/arith.hpp"

namespace axadd {

/// Word-level model of every adder variant. The low m bits and the carry
/// speculated into the accurate upper section follow the selected kind; the
/// upper (n-m)-bit sum is exact and the carry-out is kept as bit n.
AddResult approx_add(const AdderConfig& cfg, Word a, Word b);

/// One row of the two-MSB behaviour table: the top two LSM bit pairs and the
/// 3-bit (carry, s1, s0) outputs of the exact and approximate rules.
struct TruthTableRow {
    unsigned a_bits = 0;   // [A_{m-1}, A_{m-2}]
    unsigned b_bits = 0;
    unsigned accurate = 0; // 3-bit true sum
    unsigned approx = 0;
    bool erroneous = false;

    bool operator==(const TruthTableRow&) const = default;
};

/// All 16 ordered (a_bits, b_bits) combinations at m = 2, k = 0; ten are
/// distinct up to operand order.
std::vector<TruthTableRow> lsm_truth_table(AdderKind kind);

/// Rows with b <= a, ordered by (a, b): the ten unordered-distinct cases.
std::vector<TruthTableRow> lsm_truth_table_unordered(AdderKind kind);

/// True for every kind whose result is symmetric in (a, b); only the
/// input-passthrough adder copies one operand and is not.
bool kind_is_commutative(AdderKind kind);

} // namespace axadd
