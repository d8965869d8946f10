#pragma once

#include <string>
#include <vector>

#include "ccdepth/circuit.hpp"
#include "ccdepth/gf2.hpp"
#include "ccdepth/pauli.hpp"

namespace ccdepth {

// Exact Clifford semantics: rows are the conjugation images of X_1..X_n,
// Z_1..Z_n as binary symplectic vectors (x-part | z-part) with one sign bit
// each. Global phase is not tracked; Cliffords are compared projectively.
class CliffordTableau {
  public:
    CliffordTableau() = default;
    explicit CliffordTableau(std::size_t n);

    static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }

    std::size_t width() const { return n_; }

    PauliString row(std::size_t r) const;
    void set_row(std::size_t r, const PauliString& p);

    // Append a gate in circuit time order (post-composition).
    void apply_gate(const Gate& g);
    void apply_circuit(const LayeredCircuit& c);

    // Image of an arbitrary Pauli string under this Clifford's conjugation.
    PauliString push(const PauliString& p) const;

    // Tableau of "this, then later".
    CliffordTableau then(const CliffordTableau& later) const;
    CliffordTableau inverse() const;

    bool is_symplectic() const;
    bool is_identity() const;

    const BinMatrix& symplectic() const { return symp_; }
    const BinVector& signs() const { return signs_; }
    BinMatrix& symplectic() { return symp_; }
    BinVector& signs() { return signs_; }

    friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

  private:
    std::size_t n_ = 0;
    BinMatrix symp_;   // 2n x 2n
    BinVector signs_;  // 2n
};

CliffordTableau to_tableau(const LayeredCircuit& c);

// Tableau of the linear permutation |x> -> |Mx> (all signs +).
CliffordTableau tableau_of_linear(const BinMatrix& m);

// Text format: QUBITS n, then 2n rows of 2n bits, then one row of 2n signs.
CliffordTableau parse_tableau(const std::string& text);
std::string serialize_tableau(const CliffordTableau& t);

}  // namespace ccdepth
