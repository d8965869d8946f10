#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ccdepth/gf2.hpp"

namespace ccdepth {

enum class PauliOp : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliOp p);
PauliOp pauli_from_char(char c);

// A Hermitian single-qubit Pauli with sign: (-1)^neg * op.
struct SignedPauli {
    PauliOp op = PauliOp::I;
    bool neg = false;

    friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

std::string to_string(const SignedPauli& p);
SignedPauli signed_pauli_from_string(const std::string& s);

// Single-qubit Clifford, phase-free, represented by the conjugation images of
// X and Z. Exactly 24 distinct values; images must anticommute.
struct Clifford1Q {
    SignedPauli image_x{PauliOp::X, false};
    SignedPauli image_z{PauliOp::Z, false};

    bool valid() const;
    // U (sP) U^dag for any signed Pauli (I maps to itself).
    SignedPauli conjugate(const SignedPauli& p) const;
    // Clifford of "this, then later" (operator product later * this).
    Clifford1Q then(const Clifford1Q& later) const;
    Clifford1Q inverse() const;

    static Clifford1Q identity();
    static Clifford1Q h();
    static Clifford1Q s();
    static Clifford1Q sdg();
    static Clifford1Q x();
    static Clifford1Q y();
    static Clifford1Q z();
    static const std::vector<Clifford1Q>& all();

    friend bool operator==(const Clifford1Q&, const Clifford1Q&) = default;
};

std::string to_string(const Clifford1Q& c);

// n-qubit Pauli with an i-power phase: value = i^phase * prod_q W(x_q, z_q)
// where W(0,0)=I, W(1,0)=X, W(0,1)=Z, W(1,1)=Y. Hermitian strings have even
// phase; tableau rows keep phase in {0, 2}.
struct PauliString {
    BinVector x, z;
    uint8_t phase = 0;  // mod 4

    explicit PauliString(std::size_t n) : x(n), z(n) {}
    PauliString() = default;

    std::size_t width() const { return x.size(); }
    void mul_right(const PauliString& other);  // this := this * other
    bool commutes_with(const PauliString& other) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

// i-power picked up when multiplying two single-site Paulis in the W
// convention: W(x1,z1) W(x2,z2) = i^phase W(x1^x2, z1^z2).
int pauli_site_phase(int x1, int z1, int x2, int z2);

// Do two exact single-qubit Clifford unitaries commute (as unitaries, phases
// included)? Backed by exact integer arithmetic in Z[e^{i pi/4}].
bool clifford1q_unitaries_commute(const Clifford1Q& a, const Clifford1Q& b);

}  // namespace ccdepth
