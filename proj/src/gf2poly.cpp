#include "ccdepth/gf2poly.hpp"

#include <stdexcept>

namespace ccdepth {
namespace poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::invalid_argument("poly::divmod: division by zero");
    if (a.size() < b.size()) return {zero(), a};
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1, 0);
    for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
        if (rem.size() > shift + b.size() - 1 && rem[shift + b.size() - 1]) {
            quot[shift] = 1;
            for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] ^= b[i];
        }
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return a;  // monic automatically over GF(2)
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    return mul(divmod(a, gcd(a, b)).first, b);
}

bool divides(const Poly& a, const Poly& b) {
    if (a.empty()) return b.empty();
    return divmod(b, a).second.empty();
}

bool equal(const Poly& a, const Poly& b) { return a == b; }

Poly factor_part(Poly p, Poly f) {
    Poly part = one();
    Poly g = gcd(p, f);
    while (degree(g) > 0) {
        part = mul(part, g);
        p = divmod(p, g).first;
        g = gcd(p, g);
    }
    return part;
}

std::string to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (!p[i]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

}  // namespace poly
}  // namespace ccdepth
