#include "ccdepth/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ccdepth {

Gate Gate::cnot(uint32_t control, uint32_t target) {
    if (control == target) throw std::invalid_argument("CNOT: control equals target");
    return Gate{GateKind::CNOT, control, target, {}};
}

Gate Gate::cz(uint32_t p, uint32_t q) {
    if (p == q) throw std::invalid_argument("CZ: identical qubits");
    return Gate{GateKind::CZ, p, q, {}};
}

Gate Gate::cy(uint32_t control, uint32_t target) {
    if (control == target) throw std::invalid_argument("CY: control equals target");
    return Gate{GateKind::CY, control, target, {}};
}

Gate Gate::sq(uint32_t qubit, const Clifford1Q& op) {
    if (!op.valid()) throw std::invalid_argument("SQ: invalid single-qubit Clifford");
    return Gate{GateKind::SQ, qubit, 0, op};
}

namespace {

// Controlled-Pauli label at a given qubit of a two-qubit gate: CNOT = C(Z,X),
// CZ = C(Z,Z), CY = C(Z,Y).
PauliOp overlap_pauli(const Gate& g, uint32_t qubit) {
    if (qubit == g.a) return PauliOp::Z;
    switch (g.kind) {
        case GateKind::CNOT: return PauliOp::X;
        case GateKind::CZ: return PauliOp::Z;
        case GateKind::CY: return PauliOp::Y;
        default: throw std::logic_error("overlap_pauli: single-qubit gate");
    }
}

bool on_support(const Gate& g, uint32_t q) {
    if (g.kind == GateKind::SQ) return g.a == q;
    return g.a == q || g.b == q;
}

}  // namespace

bool gates_commute(const Gate& g1, const Gate& g2) {
    if (g1.kind == GateKind::SQ && g2.kind == GateKind::SQ) {
        if (g1.a != g2.a) return true;
        return clifford1q_unitaries_commute(g1.op, g2.op);
    }
    if (g1.kind == GateKind::SQ || g2.kind == GateKind::SQ) {
        const Gate& sq = g1.kind == GateKind::SQ ? g1 : g2;
        const Gate& two = g1.kind == GateKind::SQ ? g2 : g1;
        if (!on_support(two, sq.a)) return true;
        // U C(P,Q) U^dag = C(UPU^dag, Q); equal gates iff the Pauli at the
        // shared qubit is fixed with a + sign.
        SignedPauli img = sq.op.conjugate(SignedPauli{overlap_pauli(two, sq.a), false});
        return img == SignedPauli{overlap_pauli(two, sq.a), false};
    }
    // Two controlled-Pauli gates commute iff they carry the same Pauli on
    // every shared qubit.
    for (uint32_t q : {g1.a, g1.b}) {
        if (on_support(g2, q) && overlap_pauli(g1, q) != overlap_pauli(g2, q)) return false;
    }
    return true;
}

bool validate_layer(const Layer& layer) {
    for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j)
            if (!gates_commute(layer[i], layer[j])) return false;
    return true;
}

bool validate_circuit(const LayeredCircuit& c) {
    for (const Layer& l : c.layers)
        if (!validate_layer(l)) return false;
    return true;
}

std::size_t depth(const LayeredCircuit& c) { return c.layers.size(); }

CircuitSize size(const LayeredCircuit& c) {
    CircuitSize s;
    for (const Layer& l : c.layers)
        for (const Gate& g : l) {
            ++s.total;
            if (g.is_two_qubit()) ++s.two_qubit;
        }
    return s;
}

BinMatrix to_linear_matrix(const LayeredCircuit& c) {
    BinMatrix m = BinMatrix::identity(c.width);
    for (const Layer& l : c.layers)
        for (const Gate& g : l) {
            if (g.kind != GateKind::CNOT)
                throw std::invalid_argument("to_linear_matrix: non-CNOT gate");
            m.xor_rows(g.b, g.a);
        }
    return m;
}

Layer linear_addition_layer(const BinMatrix& m, const std::vector<uint32_t>& control_reg,
                            const std::vector<uint32_t>& target_reg) {
    if (m.cols() != control_reg.size() || m.rows() != target_reg.size())
        throw std::invalid_argument("linear_addition_layer: dimension mismatch");
    for (uint32_t c : control_reg)
        for (uint32_t t : target_reg)
            if (c == t) throw std::invalid_argument("linear_addition_layer: overlapping registers");
    Layer layer;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) layer.push_back(Gate::cnot(control_reg[j], target_reg[i]));
    return layer;
}

namespace {

struct AdditionShape {
    std::vector<uint32_t> controls, targets;  // sorted
    BinMatrix m;
};

// Recover (M, registers) from a pure cross-register CNOT layer.
AdditionShape parse_addition(const Layer& l) {
    AdditionShape s;
    std::vector<uint32_t> cs, ts;
    for (const Gate& g : l) {
        if (g.kind != GateKind::CNOT)
            throw std::invalid_argument("merge_adjacent_additions: non-CNOT gate");
        cs.push_back(g.a);
        ts.push_back(g.b);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (uint32_t c : cs)
        if (std::binary_search(ts.begin(), ts.end(), c))
            throw std::invalid_argument("merge_adjacent_additions: not a linear addition layer");
    s.controls = std::move(cs);
    s.targets = std::move(ts);
    s.m = BinMatrix(s.targets.size(), s.controls.size());
    for (const Gate& g : l) {
        std::size_t j = std::size_t(
            std::lower_bound(s.controls.begin(), s.controls.end(), g.a) - s.controls.begin());
        std::size_t i = std::size_t(std::lower_bound(s.targets.begin(), s.targets.end(), g.b) -
                                    s.targets.begin());
        s.m.flip(i, j);
    }
    return s;
}

}  // namespace

Layer merge_adjacent_additions(const Layer& l1, const Layer& l2) {
    if (l1.empty()) return l2;
    if (l2.empty()) return l1;
    AdditionShape a = parse_addition(l1);
    AdditionShape b = parse_addition(l2);
    // Orientations align when neither layer's controls intersect the other's
    // targets; the union registers then define A + B.
    for (uint32_t c : a.controls)
        if (std::binary_search(b.targets.begin(), b.targets.end(), c))
            throw std::invalid_argument("merge_adjacent_additions: orientation mismatch");
    for (uint32_t c : b.controls)
        if (std::binary_search(a.targets.begin(), a.targets.end(), c))
            throw std::invalid_argument("merge_adjacent_additions: orientation mismatch");

    std::map<std::pair<uint32_t, uint32_t>, int> count;
    for (const Gate& g : l1) count[{g.a, g.b}] ^= 1;
    for (const Gate& g : l2) count[{g.a, g.b}] ^= 1;
    Layer out;
    for (const auto& [key, parity] : count)
        if (parity) out.push_back(Gate::cnot(key.first, key.second));
    return out;
}

LayeredCircuit relabel_wires(const LayeredCircuit& c, const std::vector<std::size_t>& perm) {
    if (perm.size() != c.width) throw std::invalid_argument("relabel_wires: bad permutation size");
    std::vector<bool> seen(c.width, false);
    for (std::size_t p : perm) {
        if (p >= c.width || seen[p]) throw std::invalid_argument("relabel_wires: not a bijection");
        seen[p] = true;
    }
    LayeredCircuit out;
    out.width = c.width;
    out.layers.reserve(c.layers.size());
    for (const Layer& l : c.layers) {
        Layer nl;
        nl.reserve(l.size());
        for (Gate g : l) {
            g.a = uint32_t(perm[g.a]);
            if (g.is_two_qubit()) g.b = uint32_t(perm[g.b]);
            nl.push_back(g);
        }
        out.layers.push_back(std::move(nl));
    }
    return out;
}

std::vector<uint32_t> contiguous_range(uint32_t first, uint32_t count) {
    std::vector<uint32_t> r(count);
    for (uint32_t i = 0; i < count; ++i) r[i] = first + i;
    return r;
}

LayeredCircuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    LayeredCircuit c;
    bool have_width = false;
    auto check_qubit = [&](long q) {
        if (q < 0 || std::size_t(q) >= c.width) throw ParseError(lineno, "qubit index out of range");
        return uint32_t(q);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "QUBITS") {
            long n;
            if (have_width) throw ParseError(lineno, "duplicate QUBITS");
            if (!(ls >> n) || n < 1) throw ParseError(lineno, "bad QUBITS count");
            c.width = std::size_t(n);
            have_width = true;
            continue;
        }
        if (!have_width) throw ParseError(lineno, "QUBITS must come first");
        if (tok == "LAYER") {
            c.layers.emplace_back();
            continue;
        }
        if (c.layers.empty()) throw ParseError(lineno, "gate before any LAYER");
        try {
            if (tok == "CNOT" || tok == "CZ" || tok == "CY") {
                long a, b;
                if (!(ls >> a >> b)) throw ParseError(lineno, "expected two qubit indices");
                uint32_t qa = check_qubit(a), qb = check_qubit(b);
                if (tok == "CNOT")
                    c.layers.back().push_back(Gate::cnot(qa, qb));
                else if (tok == "CZ")
                    c.layers.back().push_back(Gate::cz(qa, qb));
                else
                    c.layers.back().push_back(Gate::cy(qa, qb));
            } else if (tok == "SQ") {
                long q;
                std::string xs, zs;
                if (!(ls >> q >> xs >> zs)) throw ParseError(lineno, "expected SQ q X:.. Z:..");
                if (xs.rfind("X:", 0) != 0 || zs.rfind("Z:", 0) != 0)
                    throw ParseError(lineno, "expected X:<sp> Z:<sp> images");
                Clifford1Q op{signed_pauli_from_string(xs.substr(2)),
                              signed_pauli_from_string(zs.substr(2))};
                if (!op.valid()) throw ParseError(lineno, "images do not anticommute");
                c.layers.back().push_back(Gate::sq(check_qubit(q), op));
            } else {
                throw ParseError(lineno, "unknown directive '" + tok + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
    }
    if (!have_width) throw ParseError(lineno, "missing QUBITS");
    return c;
}

std::string serialize_circuit(const LayeredCircuit& c) {
    std::ostringstream out;
    out << "# ccdepth v1\n";
    out << "QUBITS " << c.width << "\n";
    for (const Layer& l : c.layers) {
        out << "LAYER\n";
        for (const Gate& g : l) {
            switch (g.kind) {
                case GateKind::CNOT: out << "CNOT " << g.a << " " << g.b << "\n"; break;
                case GateKind::CZ: out << "CZ " << g.a << " " << g.b << "\n"; break;
                case GateKind::CY: out << "CY " << g.a << " " << g.b << "\n"; break;
                case GateKind::SQ: out << "SQ " << g.a << " " << to_string(g.op) << "\n"; break;
            }
        }
    }
    return out.str();
}

}  // namespace ccdepth
