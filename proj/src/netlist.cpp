#include "axadd/netlist.hpp"

#include <algorithm>
#include <sstream>

namespace axadd {

std::string_view gate_op_name(GateOp op) {
    switch (op) {
        case GateOp::Inv: return "INV";
        case GateOp::And2: return "AND2";
        case GateOp::Or2: return "OR2";
        case GateOp::Nand2: return "NAND2";
        case GateOp::Nor2: return "NOR2";
        case GateOp::Xor2: return "XOR2";
        case GateOp::Xnor2: return "XNOR2";
        case GateOp::Ha: return "HA";
        case GateOp::Fa: return "FA";
        case GateOp::Tie1: return "TIE1";
        case GateOp::Tie0: return "TIE0";
    }
    return "?";
}

unsigned gate_op_inputs(GateOp op) {
    switch (op) {
        case GateOp::Inv: return 1;
        case GateOp::Ha: return 2;
        case GateOp::Fa: return 3;
        case GateOp::Tie1:
        case GateOp::Tie0: return 0;
        default: return 2;
    }
}

unsigned gate_op_outputs(GateOp op) {
    return (op == GateOp::Ha || op == GateOp::Fa) ? 2 : 1;
}

namespace {

/// Incremental builder: allocates nets, keeps gates in emission order.
class Builder {
public:
    explicit Builder(unsigned n) {
        nl_.n = n;
        for (unsigned i = 0; i < n; ++i) nl_.inputs_a.push_back(alloc());
        for (unsigned i = 0; i < n; ++i) nl_.inputs_b.push_back(alloc());
    }

    uint32_t a(unsigned i) const { return nl_.inputs_a[i]; }
    uint32_t b(unsigned i) const { return nl_.inputs_b[i]; }

    uint32_t emit1(GateOp op, std::vector<uint32_t> in) {
        uint32_t out = alloc();
        nl_.gates.push_back({op, std::move(in), {out}});
        return out;
    }

    // HA/FA: returns (sum, carry)
    std::pair<uint32_t, uint32_t> emit2(GateOp op, std::vector<uint32_t> in) {
        uint32_t sum = alloc();
        uint32_t carry = alloc();
        nl_.gates.push_back({op, std::move(in), {sum, carry}});
        return {sum, carry};
    }

    uint32_t tie(bool one) { return emit1(one ? GateOp::Tie1 : GateOp::Tie0, {}); }

    Netlist finish(std::vector<uint32_t> outputs) {
        nl_.outputs = std::move(outputs);
        return std::move(nl_);
    }

private:
    uint32_t alloc() { return nl_.net_count++; }
    Netlist nl_;
};

// Exact upper section over bits [m, n): returns sum nets plus carry-out.
std::vector<uint32_t> build_msm(Builder& bld, unsigned m, unsigned n, uint32_t cin,
                                MsmStyle style) {
    std::vector<uint32_t> sums;
    if (m == n) {
        sums.push_back(cin); // carry-out only
        return sums;
    }
    if (style == MsmStyle::Ripple) {
        uint32_t carry = cin;
        for (unsigned i = m; i < n; ++i) {
            auto [s, c] = bld.emit2(GateOp::Fa, {bld.a(i), bld.b(i), carry});
            sums.push_back(s);
            carry = c;
        }
        sums.push_back(carry);
        return sums;
    }
    // Lookahead: 4-bit groups; every carry inside a group is expanded in
    // parallel from the group input carry (c_{j+1} = g_j + p_j g_{j-1} + ...
    // + p_j..p_base c_base), groups chained by their carry-out.
    std::vector<uint32_t> p, g;
    for (unsigned i = m; i < n; ++i) {
        p.push_back(bld.emit1(GateOp::Xor2, {bld.a(i), bld.b(i)}));
        g.push_back(bld.emit1(GateOp::And2, {bld.a(i), bld.b(i)}));
    }
    const unsigned width = n - m;
    std::vector<uint32_t> carries(width + 1);
    carries[0] = cin;
    for (unsigned base = 0; base < width; base += 4) {
        unsigned lim = std::min(width, base + 4);
        for (unsigned j = base; j < lim; ++j) {
            uint32_t val = g[j];
            uint32_t prod = p[j];
            for (int i = static_cast<int>(j) - 1; i >= static_cast<int>(base); --i) {
                val = bld.emit1(GateOp::Or2, {val, bld.emit1(GateOp::And2, {prod, g[i]})});
                prod = bld.emit1(GateOp::And2, {prod, p[i]});
            }
            carries[j + 1] =
                bld.emit1(GateOp::Or2, {val, bld.emit1(GateOp::And2, {prod, carries[base]})});
        }
    }
    for (unsigned i = 0; i < width; ++i)
        sums.push_back(bld.emit1(GateOp::Xor2, {p[i], carries[i]}));
    sums.push_back(carries[width]);
    return sums;
}

} // namespace

Netlist build_netlist(const AdderConfig& cfg, MsmStyle msm) {
    validate_config(cfg);
    Builder bld(cfg.n);
    const unsigned m = cfg.m;
    const unsigned k = cfg.k;

    std::vector<uint32_t> sum_bits; // low to high
    uint32_t cin = 0;
    bool have_cin = false;

    if (m > 0) {
        switch (cfg.kind) {
            case AdderKind::Exact:
                break; // unreachable: exact has m = 0
            case AdderKind::Loa: {
                for (unsigned i = 0; i < m; ++i)
                    sum_bits.push_back(bld.emit1(GateOp::Or2, {bld.a(i), bld.b(i)}));
                cin = bld.emit1(GateOp::And2, {bld.a(m - 1), bld.b(m - 1)});
                have_cin = true;
                break;
            }
            case AdderKind::Loawa: {
                for (unsigned i = 0; i < m; ++i)
                    sum_bits.push_back(bld.emit1(GateOp::Or2, {bld.a(i), bld.b(i)}));
                break;
            }
            case AdderKind::Passthrough: {
                for (unsigned i = 0; i < m; ++i) sum_bits.push_back(bld.a(i));
                break;
            }
            case AdderKind::Eta: {
                // flag_i = any (1,1) pair at bit i or above; sum = flag | xor
                std::vector<uint32_t> gen(m), x(m);
                for (unsigned i = 0; i < m; ++i) {
                    gen[i] = bld.emit1(GateOp::And2, {bld.a(i), bld.b(i)});
                    x[i] = bld.emit1(GateOp::Xor2, {bld.a(i), bld.b(i)});
                }
                std::vector<uint32_t> flag(m);
                flag[m - 1] = gen[m - 1];
                for (int i = static_cast<int>(m) - 2; i >= 0; --i)
                    flag[i] = bld.emit1(GateOp::Or2, {gen[i], flag[i + 1]});
                for (unsigned i = 0; i < m; ++i)
                    sum_bits.push_back(bld.emit1(GateOp::Or2, {x[i], flag[i]}));
                break;
            }
            case AdderKind::Oloca: {
                for (unsigned i = 0; i < k; ++i) sum_bits.push_back(bld.tie(true));
                for (unsigned i = k; i < m; ++i)
                    sum_bits.push_back(bld.emit1(GateOp::Or2, {bld.a(i), bld.b(i)}));
                cin = bld.emit1(GateOp::And2, {bld.a(m - 1), bld.b(m - 1)});
                have_cin = true;
                break;
            }
            case AdderKind::Haloc: {
                for (unsigned i = 0; i < k; ++i) sum_bits.push_back(bld.tie(true));
                for (unsigned i = k; i + 2 < m; ++i)
                    sum_bits.push_back(bld.emit1(GateOp::Or2, {bld.a(i), bld.b(i)}));
                auto [xs, gs] = bld.emit2(GateOp::Ha, {bld.a(m - 2), bld.b(m - 2)});
                auto [xt, gt] = bld.emit2(GateOp::Ha, {bld.a(m - 1), bld.b(m - 1)});
                sum_bits.push_back(xs);
                sum_bits.push_back(bld.emit1(GateOp::Or2, {xt, gs}));
                cin = gt;
                have_cin = true;
                break;
            }
            case AdderKind::Herloa:
            case AdderKind::Mherloa: {
                uint32_t xt = bld.emit1(GateOp::Xor2, {bld.a(m - 1), bld.b(m - 1)});
                uint32_t gt = bld.emit1(GateOp::And2, {bld.a(m - 1), bld.b(m - 1)});
                uint32_t xs = bld.emit1(GateOp::Xor2, {bld.a(m - 2), bld.b(m - 2)});
                uint32_t gs = bld.emit1(GateOp::And2, {bld.a(m - 2), bld.b(m - 2)});
                for (unsigned i = 0; i < k; ++i) sum_bits.push_back(bld.tie(true));
                if (k + 2 < m) {
                    uint32_t boost = bld.emit1(GateOp::And2, {gt, xs});
                    for (unsigned i = k; i + 2 < m; ++i) {
                        uint32_t row = bld.emit1(GateOp::Or2, {bld.a(i), bld.b(i)});
                        sum_bits.push_back(bld.emit1(GateOp::Or2, {row, boost}));
                    }
                }
                uint32_t pred = bld.emit1(GateOp::And2, {gs, xt});
                sum_bits.push_back(bld.emit1(GateOp::Or2, {xs, pred}));
                sum_bits.push_back(bld.emit1(GateOp::Or2, {xt, gs}));
                cin = gt;
                have_cin = true;
                break;
            }
        }
    }
    if (!have_cin) cin = bld.tie(false);

    std::vector<uint32_t> msm_bits = build_msm(bld, m, cfg.n, cin, msm);
    std::vector<uint32_t> outputs = std::move(sum_bits);
    outputs.insert(outputs.end(), msm_bits.begin(), msm_bits.end());
    Netlist nl = bld.finish(std::move(outputs));
    check_netlist(nl);
    return nl;
}

void check_netlist(const Netlist& nl) {
    const auto fail = [](const std::string& why) { throw ConfigError("netlist: " + why); };
    if (nl.inputs_a.size() != nl.n || nl.inputs_b.size() != nl.n)
        fail("primary input count mismatch");
    if (nl.outputs.size() != nl.n + 1) fail("primary output count mismatch");
    std::vector<uint8_t> defined(nl.net_count, 0);
    for (uint32_t net : nl.inputs_a) defined.at(net) = 1;
    for (uint32_t net : nl.inputs_b) defined.at(net) = 1;
    for (const Gate& g : nl.gates) {
        if (g.inputs.size() != gate_op_inputs(g.op) || g.outputs.size() != gate_op_outputs(g.op))
            fail(std::string("arity mismatch on ") + std::string(gate_op_name(g.op)));
        for (uint32_t net : g.inputs)
            if (net >= nl.net_count || !defined[net])
                fail("gate input net " + std::to_string(net) + " not yet driven (cycle or dangling)");
        for (uint32_t net : g.outputs) {
            if (net >= nl.net_count) fail("net id out of range");
            if (defined[net]) fail("net " + std::to_string(net) + " driven twice");
            defined[net] = 1;
        }
    }
    for (uint32_t net : nl.outputs)
        if (net >= nl.net_count || !defined[net])
            fail("primary output net " + std::to_string(net) + " undriven");
}

AddResult simulate_netlist(const Netlist& nl, Word a, Word b) {
    if (a.width != nl.n || b.width != nl.n)
        throw ConfigError("simulate_netlist width mismatch: operands " +
                          std::to_string(a.width) + "/" + std::to_string(b.width) + " vs n=" +
                          std::to_string(nl.n));
    std::vector<uint8_t> val(nl.net_count, 0);
    for (unsigned i = 0; i < nl.n; ++i) {
        val[nl.inputs_a[i]] = static_cast<uint8_t>(a.bit(i));
        val[nl.inputs_b[i]] = static_cast<uint8_t>(b.bit(i));
    }
    for (const Gate& g : nl.gates) {
        switch (g.op) {
            case GateOp::Inv: val[g.outputs[0]] = !val[g.inputs[0]]; break;
            case GateOp::And2: val[g.outputs[0]] = val[g.inputs[0]] & val[g.inputs[1]]; break;
            case GateOp::Or2: val[g.outputs[0]] = val[g.inputs[0]] | val[g.inputs[1]]; break;
            case GateOp::Nand2: val[g.outputs[0]] = !(val[g.inputs[0]] & val[g.inputs[1]]); break;
            case GateOp::Nor2: val[g.outputs[0]] = !(val[g.inputs[0]] | val[g.inputs[1]]); break;
            case GateOp::Xor2: val[g.outputs[0]] = val[g.inputs[0]] ^ val[g.inputs[1]]; break;
            case GateOp::Xnor2: val[g.outputs[0]] = !(val[g.inputs[0]] ^ val[g.inputs[1]]); break;
            case GateOp::Ha: {
                uint8_t x = val[g.inputs[0]], y = val[g.inputs[1]];
                val[g.outputs[0]] = x ^ y;
                val[g.outputs[1]] = x & y;
                break;
            }
            case GateOp::Fa: {
                uint8_t x = val[g.inputs[0]], y = val[g.inputs[1]], z = val[g.inputs[2]];
                val[g.outputs[0]] = x ^ y ^ z;
                val[g.outputs[1]] = static_cast<uint8_t>((x & y) | (z & (x ^ y)));
                break;
            }
            case GateOp::Tie1: val[g.outputs[0]] = 1; break;
            case GateOp::Tie0: val[g.outputs[0]] = 0; break;
        }
    }
    uint64_t bits = 0;
    for (unsigned i = 0; i < nl.n; ++i)
        bits |= static_cast<uint64_t>(val[nl.outputs[i]]) << i;
    return AddResult{bits, val[nl.outputs[nl.n]] != 0, nl.n};
}

CellCostTable CellCostTable::defaults() {
    CellCostTable t;
    t.transistors_per_op = {
        {GateOp::Inv, 2},  {GateOp::Nand2, 4}, {GateOp::Nor2, 4}, {GateOp::And2, 6},
        {GateOp::Or2, 6},  {GateOp::Xor2, 12}, {GateOp::Xnor2, 12}, {GateOp::Ha, 18},
        {GateOp::Fa, 28},  {GateOp::Tie1, 0},  {GateOp::Tie0, 0},
    };
    return t;
}

CellCostTable parse_cell_costs(const std::string& text) {
    CellCostTable t;
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
            throw ConfigError("cell cost line " + std::to_string(line_no) + ": expected OP=count");
        std::string key = line.substr(0, eq);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        GateOp op;
        bool found = false;
        for (GateOp cand : {GateOp::Inv, GateOp::And2, GateOp::Or2, GateOp::Nand2, GateOp::Nor2,
                            GateOp::Xor2, GateOp::Xnor2, GateOp::Ha, GateOp::Fa, GateOp::Tie1,
                            GateOp::Tie0}) {
            if (key == gate_op_name(cand)) {
                op = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw ConfigError("cell cost line " + std::to_string(line_no) + ": unknown op '" +
                              key + "'");
        std::string rest = line.substr(eq + 1);
        size_t pos = 0;
        long long v = std::stoll(rest, &pos);
        if (v < 0) throw ConfigError("cell cost line " + std::to_string(line_no) + ": negative");
        t.transistors_per_op[op] = static_cast<uint32_t>(v);
    }
    return t;
}

uint64_t transistor_count(const Netlist& nl, const CellCostTable& costs) {
    uint64_t total = 0;
    for (const Gate& g : nl.gates) {
        auto it = costs.transistors_per_op.find(g.op);
        if (it == costs.transistors_per_op.end())
            throw ConfigError(std::string("no transistor cost for ") +
                              std::string(gate_op_name(g.op)));
        total += it->second;
    }
    return total;
}

std::string export_netlist(const Netlist& nl) {
    std::ostringstream out;
    for (size_t i = 0; i < nl.gates.size(); ++i) {
        const Gate& g = nl.gates[i];
        out << i << ' ' << gate_op_name(g.op);
        for (uint32_t net : g.inputs) out << ' ' << net;
        out << " ->";
        for (uint32_t net : g.outputs) out << ' ' << net;
        out << '\n';
    }
    return out.str();
}

} // namespace axadd
