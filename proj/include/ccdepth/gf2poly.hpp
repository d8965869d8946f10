#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccdepth {

// Dense GF(2)[x] polynomial, coefficients LSB-first (p[i] = coeff of x^i).
// The zero polynomial is the empty vector; nonzero polynomials keep their
// leading 1 as the last entry.
using Poly = std::vector<uint8_t>;

namespace poly {

inline Poly zero() { return {}; }
inline Poly one() { return {1}; }
inline Poly x() { return {0, 1}; }

inline bool is_zero(const Poly& p) { return p.empty(); }
inline bool is_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }
inline int degree(const Poly& p) { return int(p.size()) - 1; }

void trim(Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// Quotient and remainder of a by b (b != 0).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b
bool equal(const Poly& a, const Poly& b);

// Largest divisor of p composed of irreducible factors that divide f.
Poly factor_part(Poly p, Poly f);

std::string to_string(const Poly& p);

}  // namespace poly
}  // namespace ccdepth
