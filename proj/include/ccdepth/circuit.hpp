#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccdepth/gf2.hpp"
#include "ccdepth/pauli.hpp"

namespace ccdepth {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

enum class GateKind : uint8_t { CNOT, CZ, CY, SQ };

struct Gate {
    GateKind kind = GateKind::CNOT;
    uint32_t a = 0;  // CNOT/CY control; CZ first qubit; SQ qubit
    uint32_t b = 0;  // CNOT/CY target; CZ second qubit; unused for SQ
    Clifford1Q op;   // SQ only

    static Gate cnot(uint32_t control, uint32_t target);
    static Gate cz(uint32_t p, uint32_t q);
    static Gate cy(uint32_t control, uint32_t target);
    static Gate sq(uint32_t qubit, const Clifford1Q& op);

    bool is_two_qubit() const { return kind != GateKind::SQ; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

using Layer = std::vector<Gate>;

struct LayeredCircuit {
    std::size_t width = 0;
    std::vector<Layer> layers;

    friend bool operator==(const LayeredCircuit&, const LayeredCircuit&) = default;
};

struct CircuitSize {
    std::size_t two_qubit = 0;
    std::size_t total = 0;
};

// Exact unitary commutation for gates from the generating set. Disjoint
// supports commute; overlapping pairs are decided by the controlled-Pauli
// overlap rule and, for single-qubit pairs, an exact 2x2 commutator.
bool gates_commute(const Gate& g1, const Gate& g2);

bool validate_layer(const Layer& layer);
bool validate_circuit(const LayeredCircuit& c);

std::size_t depth(const LayeredCircuit& c);
CircuitSize size(const LayeredCircuit& c);

// The n x n matrix of the induced linear permutation; CNOT-only circuits.
BinMatrix to_linear_matrix(const LayeredCircuit& c);

// One commuting layer of weight(M) CNOTs realizing |x>|y> -> |x>|y + Mx>,
// control j-th qubit of control_reg, target i-th qubit of target_reg per
// M(i,j) = 1. Registers are given as explicit qubit lists and must not
// overlap.
Layer linear_addition_layer(const BinMatrix& m, const std::vector<uint32_t>& control_reg,
                            const std::vector<uint32_t>& target_reg);

// Combine two aligned linear additions into the addition by A + B; gates for
// cancelled entries vanish.
Layer merge_adjacent_additions(const Layer& l1, const Layer& l2);

LayeredCircuit relabel_wires(const LayeredCircuit& c, const std::vector<std::size_t>& perm);

LayeredCircuit parse_circuit(const std::string& text);
std::string serialize_circuit(const LayeredCircuit& c);

std::vector<uint32_t> contiguous_range(uint32_t first, uint32_t count);

}  // namespace ccdepth
