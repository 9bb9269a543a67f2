#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axadd/arith.hpp"

namespace axadd {

enum class GateOp {
    Inv,
    And2,
    Or2,
    Nand2,
    Nor2,
    Xor2,
    Xnor2,
    Ha,   // 2 in -> (sum, carry)
    Fa,   // 3 in -> (sum, carry)
    Tie1, // 0 in -> constant 1
    Tie0,
};

std::string_view gate_op_name(GateOp op);
unsigned gate_op_inputs(GateOp op);
unsigned gate_op_outputs(GateOp op);

struct Gate {
    GateOp op;
    std::vector<uint32_t> inputs;
    std::vector<uint32_t> outputs;
};

/// Structural counterpart of the adder schematics: acyclic, gates in
/// topological order, every net written at most once. Primary outputs may
/// alias a primary input or another gate's output net.
struct Netlist {
    unsigned n = 0;                  // operand width
    std::vector<uint32_t> inputs_a;  // n net ids
    std::vector<uint32_t> inputs_b;  // n net ids
    std::vector<uint32_t> outputs;   // n+1 net ids (bit n is the carry-out)
    std::vector<Gate> gates;
    uint32_t net_count = 0;
};

enum class MsmStyle { Ripple, Lookahead };

/// Builds the gate-level structure for a validated config; computes the same
/// function as approx_add (checked by tests, not assumed).
Netlist build_netlist(const AdderConfig& cfg, MsmStyle msm = MsmStyle::Ripple);

/// Throws ConfigError if the structural invariants are violated (arity,
/// topological order, single driver, outputs driven).
void check_netlist(const Netlist& nl);

/// Topological evaluation; the independent oracle for the functional models.
AddResult simulate_netlist(const Netlist& nl, Word a, Word b);

/// Per-gate-op transistor costs. Defaults are static complementary-style
/// counts; load a table file to calibrate against a different cell library.
struct CellCostTable {
    std::map<GateOp, uint32_t> transistors_per_op;

    static CellCostTable defaults();
};

/// Parses the flat `OP=count` text format (`#` comments).
CellCostTable parse_cell_costs(const std::string& text);

uint64_t transistor_count(const Netlist& nl, const CellCostTable& costs);

/// One gate per line: `<id> <OP> <in...> -> <out...>`, topological order.
std::string export_netlist(const Netlist& nl);

} // namespace axadd
