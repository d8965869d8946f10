#include "ccdepth/tableau.hpp"

#include <array>
#include <map>
#include <sstream>

namespace ccdepth {

namespace {

// Conjugation tables are built from generator images with exact phase
// arithmetic, then drive bit-level row updates.

PauliString two_site(int x0, int z0, int x1, int z1) {
    PauliString p(2);
    if (x0) p.x.set(0, true);
    if (z0) p.z.set(0, true);
    if (x1) p.x.set(1, true);
    if (z1) p.z.set(1, true);
    return p;
}

struct TwoQubitTable {
    // index = xc | zc<<1 | xt<<2 | zt<<3; value = bits in same packing plus
    // sign in bit 4
    std::array<uint8_t, 16> entry{};
};

TwoQubitTable build_table(const PauliString& img_xc, const PauliString& img_zc,
                          const PauliString& img_xt, const PauliString& img_zt) {
    TwoQubitTable t;
    for (int idx = 0; idx < 16; ++idx) {
        int xc = idx & 1, zc = (idx >> 1) & 1, xt = (idx >> 2) & 1, zt = (idx >> 3) & 1;
        PauliString acc(2);
        acc.phase = uint8_t((xc * zc + xt * zt) & 3);
        if (xc) acc.mul_right(img_xc);
        if (zc) acc.mul_right(img_zc);
        if (xt) acc.mul_right(img_xt);
        if (zt) acc.mul_right(img_zt);
        if (acc.phase & 1) throw std::logic_error("build_table: non-Hermitian image");
        uint8_t out = uint8_t(acc.x.get(0) | (acc.z.get(0) << 1) | (acc.x.get(1) << 2) |
                              (acc.z.get(1) << 3) | ((acc.phase >> 1) << 4));
        t.entry[std::size_t(idx)] = out;
    }
    return t;
}

const TwoQubitTable& table_for(GateKind kind) {
    static const TwoQubitTable cnot =
        build_table(two_site(1, 0, 1, 0), two_site(0, 1, 0, 0), two_site(0, 0, 1, 0),
                    two_site(0, 1, 0, 1));
    static const TwoQubitTable cz =
        build_table(two_site(1, 0, 0, 1), two_site(0, 1, 0, 0), two_site(0, 1, 1, 0),
                    two_site(0, 0, 0, 1));
    static const TwoQubitTable cy =
        build_table(two_site(1, 0, 1, 1), two_site(0, 1, 0, 0), two_site(0, 1, 1, 0),
                    two_site(0, 1, 0, 1));
    switch (kind) {
        case GateKind::CNOT: return cnot;
        case GateKind::CZ: return cz;
        case GateKind::CY: return cy;
        default: throw std::logic_error("table_for: single-qubit gate");
    }
}

struct OneQubitTable {
    std::array<uint8_t, 4> entry{};  // index = x | z<<1; value = x | z<<1 | sign<<2
};

PauliString one_site(const SignedPauli& p) {
    // In the W convention bits (1,1) are exactly Y, so only the sign matters.
    PauliString s(1);
    if (p.op == PauliOp::X || p.op == PauliOp::Y) s.x.set(0, true);
    if (p.op == PauliOp::Z || p.op == PauliOp::Y) s.z.set(0, true);
    if (p.neg) s.phase = 2;
    return s;
}

const OneQubitTable& table_for(const Clifford1Q& op) {
    static std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, OneQubitTable> cache;
    auto key = std::pair(std::pair(int(op.image_x.op), int(op.image_x.neg)),
                         std::pair(int(op.image_z.op), int(op.image_z.neg)));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    OneQubitTable t;
    PauliString ix = one_site(op.image_x);
    // one_site applies the W-convention; for images we need the plain signed
    // Pauli value, which W already equals for X, Z and matches Y up to the
    // phase folded in above.
    PauliString iz = one_site(op.image_z);
    for (int idx = 0; idx < 4; ++idx) {
        int x = idx & 1, z = (idx >> 1) & 1;
        PauliString acc(1);
        acc.phase = uint8_t((x * z) & 3);
        if (x) acc.mul_right(ix);
        if (z) acc.mul_right(iz);
        if (acc.phase & 1) throw std::logic_error("sq table: non-Hermitian image");
        t.entry[std::size_t(idx)] =
            uint8_t(acc.x.get(0) | (acc.z.get(0) << 1) | ((acc.phase >> 1) << 2));
    }
    return cache.emplace(key, t).first->second;
}

}  // namespace

CliffordTableau::CliffordTableau(std::size_t n) : n_(n), symp_(2 * n, 2 * n), signs_(2 * n) {
    for (std::size_t i = 0; i < 2 * n; ++i) symp_.set(i, i, true);
}

PauliString CliffordTableau::row(std::size_t r) const {
    PauliString p(n_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (symp_.get(r, q)) p.x.set(q, true);
        if (symp_.get(r, n_ + q)) p.z.set(q, true);
    }
    p.phase = signs_.get(r) ? 2 : 0;
    return p;
}

void CliffordTableau::set_row(std::size_t r, const PauliString& p) {
    if (p.phase & 1) throw std::invalid_argument("set_row: non-Hermitian Pauli");
    for (std::size_t q = 0; q < n_; ++q) {
        symp_.set(r, q, p.x.get(q));
        symp_.set(r, n_ + q, p.z.get(q));
    }
    signs_.set(r, p.phase == 2);
}

void CliffordTableau::apply_gate(const Gate& g) {
    if (g.kind == GateKind::SQ) {
        if (g.a >= n_) throw std::invalid_argument("apply_gate: qubit out of range");
        const OneQubitTable& t = table_for(g.op);
        for (std::size_t r = 0; r < 2 * n_; ++r) {
            int idx = int(symp_.get(r, g.a)) | (int(symp_.get(r, n_ + g.a)) << 1);
            uint8_t out = t.entry[std::size_t(idx)];
            symp_.set(r, g.a, out & 1);
            symp_.set(r, n_ + g.a, (out >> 1) & 1);
            if ((out >> 2) & 1) signs_.flip(r);
        }
        return;
    }
    if (g.a >= n_ || g.b >= n_) throw std::invalid_argument("apply_gate: qubit out of range");
    const TwoQubitTable& t = table_for(g.kind);
    const std::size_t c = g.a, tq = g.b;
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        int idx = int(symp_.get(r, c)) | (int(symp_.get(r, n_ + c)) << 1) |
                  (int(symp_.get(r, tq)) << 2) | (int(symp_.get(r, n_ + tq)) << 3);
        uint8_t out = t.entry[std::size_t(idx)];
        symp_.set(r, c, out & 1);
        symp_.set(r, n_ + c, (out >> 1) & 1);
        symp_.set(r, tq, (out >> 2) & 1);
        symp_.set(r, n_ + tq, (out >> 3) & 1);
        if ((out >> 4) & 1) signs_.flip(r);
    }
}

void CliffordTableau::apply_circuit(const LayeredCircuit& c) {
    if (c.width != n_) throw std::invalid_argument("apply_circuit: width mismatch");
    for (const Layer& l : c.layers)
        for (const Gate& g : l) apply_gate(g);
}

PauliString CliffordTableau::push(const PauliString& p) const {
    if (p.width() != n_) throw std::invalid_argument("push: width mismatch");
    PauliString acc(n_);
    acc.phase = p.phase;
    for (std::size_t q = 0; q < n_; ++q) {
        bool x = p.x.get(q), z = p.z.get(q);
        if (!x && !z) continue;
        acc.phase = uint8_t((acc.phase + (x && z ? 1 : 0)) & 3);
        if (x) acc.mul_right(row(q));
        if (z) acc.mul_right(row(n_ + q));
    }
    return acc;
}

CliffordTableau CliffordTableau::then(const CliffordTableau& later) const {
    if (later.n_ != n_) throw std::invalid_argument("then: width mismatch");
    CliffordTableau out(n_);
    for (std::size_t r = 0; r < 2 * n_; ++r) out.set_row(r, later.push(row(r)));
    return out;
}

CliffordTableau CliffordTableau::inverse() const {
    CliffordTableau out(n_);
    BinMatrix minv = ccdepth::inverse(symp_);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        PauliString p(n_);
        for (std::size_t q = 0; q < n_; ++q) {
            if (minv.get(r, q)) p.x.set(q, true);
            if (minv.get(r, n_ + q)) p.z.set(q, true);
        }
        PauliString image = push(p);
        if (image.phase & 1) throw std::logic_error("inverse: non-Hermitian image");
        p.phase = image.phase;  // flip the sign so the image comes out +
        out.set_row(r, p);
    }
    return out;
}

bool CliffordTableau::is_symplectic() const {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        PauliString pi = row(i);
        for (std::size_t j = i; j < 2 * n_; ++j) {
            bool anticommute = !pi.commutes_with(row(j));
            bool expected = (j == i + n_) && i < n_;
            if (anticommute != expected) return false;
        }
    }
    return true;
}

bool CliffordTableau::is_identity() const {
    return symp_.is_identity() && signs_.is_zero();
}

CliffordTableau to_tableau(const LayeredCircuit& c) {
    CliffordTableau t(c.width);
    t.apply_circuit(c);
    return t;
}

CliffordTableau tableau_of_linear(const BinMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("tableau_of_linear: matrix not square");
    const std::size_t n = m.rows();
    BinMatrix minv_t = transpose(inverse(m));
    CliffordTableau t(n);
    BinMatrix& s = t.symplectic();
    s = BinMatrix(2 * n, 2 * n);
    // X^a -> X^{Ma}: row q of the X block is column q of M; Z^b -> Z^{M^-T b}.
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < n; ++i) {
            if (m.get(i, q)) s.set(q, i, true);
            if (minv_t.get(i, q)) s.set(n + q, n + i, true);
        }
    return t;
}

CliffordTableau parse_tableau(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (n == 0) {
            std::istringstream ls(line);
            std::string tok;
            long v = 0;
            if (!(ls >> tok >> v) || tok != "QUBITS" || v < 1)
                throw ParseError(lineno, "expected QUBITS <n>");
            n = std::size_t(v);
            continue;
        }
        for (char ch : line)
            if (ch != '0' && ch != '1') throw ParseError(lineno, "expected a 0/1 row");
        if (line.size() != 2 * n) throw ParseError(lineno, "row has wrong length");
        rows.push_back(line);
    }
    if (n == 0) throw ParseError(lineno, "missing QUBITS");
    if (rows.size() != 2 * n + 1)
        throw ParseError(lineno, "expected 2n symplectic rows plus one sign row");
    CliffordTableau t(n);
    for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t c = 0; c < 2 * n; ++c) t.symplectic().set(r, c, rows[r][c] == '1');
    for (std::size_t r = 0; r < 2 * n; ++r) t.signs().set(r, rows[2 * n][r] == '1');
    if (!t.is_symplectic()) throw ParseError(lineno, "matrix is not symplectic");
    return t;
}

std::string serialize_tableau(const CliffordTableau& t) {
    std::ostringstream out;
    const std::size_t n = t.width();
    out << "QUBITS " << n << "\n";
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t c = 0; c < 2 * n; ++c) out << (t.symplectic().get(r, c) ? '1' : '0');
        out << "\n";
    }
    for (std::size_t r = 0; r < 2 * n; ++r) out << (t.signs().get(r) ? '1' : '0');
    out << "\n";
    return out.str();
}

}  // namespace ccdepth
