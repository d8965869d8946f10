#include "ccdepth/pauli.hpp"

#include <map>
#include <stdexcept>

namespace ccdepth {

char pauli_char(PauliOp p) {
    switch (p) {
        case PauliOp::I: return 'I';
        case PauliOp::X: return 'X';
        case PauliOp::Y: return 'Y';
        case PauliOp::Z: return 'Z';
    }
    return '?';
}

PauliOp pauli_from_char(char c) {
    switch (c) {
        case 'I': return PauliOp::I;
        case 'X': return PauliOp::X;
        case 'Y': return PauliOp::Y;
        case 'Z': return PauliOp::Z;
        default: throw std::invalid_argument("pauli_from_char: bad character");
    }
}

std::string to_string(const SignedPauli& p) {
    return std::string(1, p.neg ? '-' : '+') + pauli_char(p.op);
}

SignedPauli signed_pauli_from_string(const std::string& s) {
    if (s.size() != 2 || (s[0] != '+' && s[0] != '-'))
        throw std::invalid_argument("signed_pauli_from_string: expected like +X");
    return SignedPauli{pauli_from_char(s[1]), s[0] == '-'};
}

namespace {

// (x, z) bits of a Pauli in the W convention.
std::pair<int, int> pauli_bits(PauliOp p) {
    switch (p) {
        case PauliOp::I: return {0, 0};
        case PauliOp::X: return {1, 0};
        case PauliOp::Y: return {1, 1};
        case PauliOp::Z: return {0, 1};
    }
    return {0, 0};
}

PauliOp pauli_of_bits(int x, int z) {
    if (x && z) return PauliOp::Y;
    if (x) return PauliOp::X;
    if (z) return PauliOp::Z;
    return PauliOp::I;
}

// Multiply signed single-site Paulis; the product of two anticommuting
// Hermitian Paulis carries an i, which the caller must cancel.
struct SitePauli {
    int x = 0, z = 0, phase = 0;  // value = i^phase W(x, z)
};

SitePauli site_mul(const SitePauli& a, const SitePauli& b) {
    SitePauli r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.phase = (a.phase + b.phase + pauli_site_phase(a.x, a.z, b.x, b.z)) & 3;
    return r;
}

SitePauli site_of(const SignedPauli& p) {
    auto [x, z] = pauli_bits(p.op);
    return SitePauli{x, z, p.neg ? 2 : 0};
}

SignedPauli signed_of(const SitePauli& s) {
    if (s.phase & 1) throw std::logic_error("signed_of: non-Hermitian site Pauli");
    return SignedPauli{pauli_of_bits(s.x, s.z), s.phase == 2};
}

}  // namespace

int pauli_site_phase(int x1, int z1, int x2, int z2) {
    int x3 = x1 ^ x2, z3 = z1 ^ z2;
    return (x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3) & 3;
}

bool Clifford1Q::valid() const {
    if (image_x.op == PauliOp::I || image_z.op == PauliOp::I) return false;
    return image_x.op != image_z.op;  // distinct non-identity Paulis anticommute
}

SignedPauli Clifford1Q::conjugate(const SignedPauli& p) const {
    switch (p.op) {
        case PauliOp::I: return p;
        case PauliOp::X: {
            SignedPauli r = image_x;
            r.neg ^= p.neg;
            return r;
        }
        case PauliOp::Z: {
            SignedPauli r = image_z;
            r.neg ^= p.neg;
            return r;
        }
        case PauliOp::Y: {
            // Y = i X Z, so U Y U^dag = i (UXU^dag)(UZU^dag).
            SitePauli prod = site_mul(site_of(image_x), site_of(image_z));
            prod.phase = (prod.phase + 1) & 3;
            SignedPauli r = signed_of(prod);
            r.neg ^= p.neg;
            return r;
        }
    }
    return p;
}

Clifford1Q Clifford1Q::then(const Clifford1Q& later) const {
    Clifford1Q r;
    r.image_x = later.conjugate(image_x);
    r.image_z = later.conjugate(image_z);
    return r;
}

Clifford1Q Clifford1Q::inverse() const {
    Clifford1Q r;
    for (PauliOp p : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
        SignedPauli img = conjugate(SignedPauli{p, false});
        if (img.op == PauliOp::X) r.image_x = SignedPauli{p, img.neg};
        if (img.op == PauliOp::Z) r.image_z = SignedPauli{p, img.neg};
    }
    return r;
}

Clifford1Q Clifford1Q::identity() { return {}; }
Clifford1Q Clifford1Q::h() { return {{PauliOp::Z, false}, {PauliOp::X, false}}; }
Clifford1Q Clifford1Q::s() { return {{PauliOp::Y, false}, {PauliOp::Z, false}}; }
Clifford1Q Clifford1Q::sdg() { return {{PauliOp::Y, true}, {PauliOp::Z, false}}; }
Clifford1Q Clifford1Q::x() { return {{PauliOp::X, false}, {PauliOp::Z, true}}; }
Clifford1Q Clifford1Q::y() { return {{PauliOp::X, true}, {PauliOp::Z, true}}; }
Clifford1Q Clifford1Q::z() { return {{PauliOp::X, true}, {PauliOp::Z, false}}; }

const std::vector<Clifford1Q>& Clifford1Q::all() {
    static const std::vector<Clifford1Q> table = [] {
        std::vector<Clifford1Q> v;
        for (PauliOp px : {PauliOp::X, PauliOp::Y, PauliOp::Z})
            for (PauliOp pz : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
                if (px == pz) continue;
                for (bool sx : {false, true})
                    for (bool sz : {false, true})
                        v.push_back(Clifford1Q{{px, sx}, {pz, sz}});
            }
        return v;
    }();
    return table;
}

std::string to_string(const Clifford1Q& c) {
    return "X:" + to_string(c.image_x) + " Z:" + to_string(c.image_z);
}

void PauliString::mul_right(const PauliString& other) {
    long acc = phase + other.phase;
    const auto& x1 = x.words();
    const auto& z1 = z.words();
    const auto& x2 = other.x.words();
    const auto& z2 = other.z.words();
    for (std::size_t w = 0; w < x1.size(); ++w) {
        uint64_t x3 = x1[w] ^ x2[w], z3 = z1[w] ^ z2[w];
        acc += __builtin_popcountll(x1[w] & z1[w]);
        acc += __builtin_popcountll(x2[w] & z2[w]);
        acc += 2 * __builtin_popcountll(z1[w] & x2[w]);
        acc -= __builtin_popcountll(x3 & z3);
    }
    phase = uint8_t(((acc % 4) + 4) & 3);
    x.xor_with(other.x);
    z.xor_with(other.z);
}

bool PauliString::commutes_with(const PauliString& other) const {
    uint64_t acc = 0;
    for (std::size_t w = 0; w < x.words().size(); ++w) {
        acc ^= x.words()[w] & other.z.words()[w];
        acc ^= z.words()[w] & other.x.words()[w];
    }
    return (__builtin_popcountll(acc) & 1) == 0;
}

// ---- Exact unitary representatives over Z[w], w = e^{i pi/4} -------------

namespace {

// c0 + c1 w + c2 w^2 + c3 w^3 with w^4 = -1.
struct Zw {
    std::array<int64_t, 4> c{0, 0, 0, 0};
    friend Zw operator+(const Zw& a, const Zw& b) {
        Zw r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Zw operator-(const Zw& a, const Zw& b) {
        Zw r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Zw operator*(const Zw& a, const Zw& b) {
        Zw r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int k = i + j;
                int64_t v = a.c[i] * b.c[j];
                if (k >= 4) {
                    k -= 4;
                    v = -v;
                }
                r.c[k] += v;
            }
        return r;
    }
    Zw conj() const { return Zw{{c[0], -c[3], -c[2], -c[1]}}; }
    bool is_zero() const { return !c[0] && !c[1] && !c[2] && !c[3]; }
    friend bool operator==(const Zw&, const Zw&) = default;
    friend bool operator<(const Zw& a, const Zw& b) { return a.c < b.c; }
};

Zw zw_int(int64_t v) { return Zw{{v, 0, 0, 0}}; }
Zw zw_i() { return Zw{{0, 0, 1, 0}}; }  // w^2 = i

// Unnormalized 2x2 matrix; a positive real scale is irrelevant for both
// commutation tests and conjugation-image identification.
struct Mat2 {
    std::array<std::array<Zw, 2>, 2> e;
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
        return r;
    }
    Mat2 dagger() const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = e[j][i].conj();
        return r;
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_pauli(PauliOp p) {
    Mat2 m{};
    switch (p) {
        case PauliOp::I: m.e[0][0] = m.e[1][1] = zw_int(1); break;
        case PauliOp::X: m.e[0][1] = m.e[1][0] = zw_int(1); break;
        case PauliOp::Y:
            m.e[0][1] = zw_int(0) - zw_i();
            m.e[1][0] = zw_i();
            break;
        case PauliOp::Z:
            m.e[0][0] = zw_int(1);
            m.e[1][1] = zw_int(-1);
            break;
    }
    return m;
}

// M P M^dag = lambda * (+-Q) for unitary-up-to-scale M; identify (Q, sign).
SignedPauli identify_image(const Mat2& m, PauliOp p) {
    Mat2 n = m * mat_pauli(p) * m.dagger();
    for (PauliOp q : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
        for (bool neg : {false, true}) {
            Mat2 cand = mat_pauli(q);
            // find the positive integer scale from a nonzero entry
            int64_t lambda = 0;
            bool ok = true;
            for (int i = 0; i < 2 && ok; ++i)
                for (int j = 0; j < 2 && ok; ++j) {
                    Zw cv = cand.e[i][j];
                    if (neg) cv = zw_int(0) - cv;
                    if (cv.is_zero()) {
                        if (!n.e[i][j].is_zero()) ok = false;
                        continue;
                    }
                    // entries of candidates are 1, -1, i, -i: ratio must be a
                    // common positive integer
                    int64_t r = 0;
                    for (int k = 0; k < 4; ++k) {
                        if (cv.c[k] == 0) {
                            if (n.e[i][j].c[k] != 0) ok = false;
                        } else {
                            int64_t q2 = n.e[i][j].c[k] * (cv.c[k] > 0 ? 1 : -1);
                            int64_t denom = cv.c[k] > 0 ? cv.c[k] : -cv.c[k];
                            if (q2 % denom) ok = false;
                            q2 /= denom;
                            if (r == 0)
                                r = q2;
                            else if (r != q2)
                                ok = false;
                        }
                    }
                    if (r <= 0) ok = false;
                    if (lambda == 0)
                        lambda = r;
                    else if (lambda != r)
                        ok = false;
                }
            if (ok && lambda > 0) return SignedPauli{q, neg};
        }
    }
    throw std::logic_error("identify_image: conjugate is not a signed Pauli");
}

struct Key {
    SignedPauli ix, iz;
    friend bool operator<(const Key& a, const Key& b) {
        auto t = [](const SignedPauli& p) { return std::pair<int, int>(int(p.op), p.neg); };
        return std::pair(t(a.ix), t(a.iz)) < std::pair(t(b.ix), t(b.iz));
    }
};

const std::map<Key, Mat2>& unitary_table() {
    static const std::map<Key, Mat2> table = [] {
        Mat2 h{};  // sqrt(2) H
        h.e[0][0] = h.e[0][1] = h.e[1][0] = zw_int(1);
        h.e[1][1] = zw_int(-1);
        Mat2 s{};
        s.e[0][0] = zw_int(1);
        s.e[1][1] = zw_i();
        std::map<Key, Mat2> out;
        std::vector<Mat2> frontier{mat_pauli(PauliOp::I)};
        out[Key{identify_image(frontier[0], PauliOp::X), identify_image(frontier[0], PauliOp::Z)}] =
            frontier[0];
        while (!frontier.empty()) {
            std::vector<Mat2> next;
            for (const Mat2& m : frontier) {
                for (const Mat2& g : {h, s}) {
                    Mat2 p = g * m;
                    Key k{identify_image(p, PauliOp::X), identify_image(p, PauliOp::Z)};
                    if (!out.count(k)) {
                        out[k] = p;
                        next.push_back(p);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (out.size() != 24) throw std::logic_error("unitary_table: expected 24 Cliffords");
        return out;
    }();
    return table;
}

}  // namespace

bool clifford1q_unitaries_commute(const Clifford1Q& a, const Clifford1Q& b) {
    const auto& table = unitary_table();
    const Mat2& ma = table.at(Key{a.image_x, a.image_z});
    const Mat2& mb = table.at(Key{b.image_x, b.image_z});
    return ma * mb == mb * ma;
}

}  // namespace ccdepth
