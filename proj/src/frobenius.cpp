#include <cassert>
#include <stdexcept>

#include "ccdepth/gf2.hpp"
#include "ccdepth/gf2poly.hpp"

namespace ccdepth {

namespace {

// p(A) v by Horner.
BinVector apply_poly(const BinMatrix& a, const Poly& p, const BinVector& v) {
    BinVector acc(v.size());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = mul(a, acc);
        if (p[i]) acc.xor_with(v);
    }
    return acc;
}

BinMatrix columns_to_matrix(const std::vector<BinVector>& cols, std::size_t n) {
    BinMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

// Least-degree monic p with p(A) v = 0.
Poly vector_order(const BinMatrix& a, const BinVector& v) {
    const std::size_t n = a.rows();
    if (v.is_zero()) return poly::one();
    std::vector<BinVector> krylov{v};
    BinVector w = v;
    for (std::size_t k = 1; k <= n; ++k) {
        w = mul(a, w);
        auto x = solve(columns_to_matrix(krylov, n), w);
        if (x) {
            Poly p(k + 1, 0);
            for (std::size_t i = 0; i < k; ++i) p[i] = x->get(i);
            p[k] = 1;
            return p;
        }
        krylov.push_back(w);
    }
    throw std::logic_error("vector_order: no dependency within n+1 iterates");
}

// Merge (u, p) with (w, q) into a vector of order lcm(p, q), assuming
// ord(u) = p and ord(w) = q exactly.
void merge_orders(const BinMatrix& a, BinVector& u, Poly& p, const BinVector& w, const Poly& q) {
    if (poly::divides(q, p)) return;
    Poly m = poly::lcm(p, q);
    Poly g = poly::gcd(p, q);
    Poly u1 = poly::divmod(p, g).first;
    Poly d1 = poly::factor_part(p, u1);
    Poly d2 = poly::divmod(m, d1).first;
    BinVector a_part = apply_poly(a, poly::divmod(p, d1).first, u);
    BinVector b_part = apply_poly(a, poly::divmod(q, d2).first, w);
    a_part.xor_with(b_part);
    u = a_part;
    p = m;
}

// Vector whose order is the minimal polynomial, via the lcm combination lemma.
std::pair<BinVector, Poly> max_order_vector(const BinMatrix& a) {
    const std::size_t n = a.rows();
    BinVector u(n);
    u.set(0, true);
    Poly p = vector_order(a, u);
    for (std::size_t j = 1; j < n && p.size() <= n; ++j) {
        BinVector ej(n);
        ej.set(j, true);
        merge_orders(a, u, p, ej, vector_order(a, ej));
    }
    return {u, p};
}

// Berlekamp-Massey over GF(2): minimal generator g (monic, LSB-first) with
// sum_j g_j s_{i+j} = 0 for all valid i.
Poly sequence_generator(const std::vector<uint8_t>& s) {
    Poly c = poly::one(), b = poly::one();
    std::size_t l = 0, m = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
        uint8_t d = s[k];
        for (std::size_t i = 1; i <= l && i < c.size(); ++i) d ^= uint8_t(c[i] & s[k - i]);
        if (d == 0) {
            ++m;
        } else if (2 * l <= k) {
            Poly t = c;
            Poly bx = b;
            bx.insert(bx.begin(), m, 0);
            c = poly::add(c, bx);
            l = k + 1 - l;
            b = t;
            m = 1;
        } else {
            Poly bx = b;
            bx.insert(bx.begin(), m, 0);
            c = poly::add(c, bx);
            ++m;
        }
    }
    // connection poly 1 + c_1 x + ... + c_L x^L  ->  generator x^L + c_1 x^(L-1) + ...
    Poly g(l + 1, 0);
    g[l] = 1;
    for (std::size_t i = 1; i <= l; ++i) g[l - i] = i < c.size() ? c[i] : 0;
    return g;
}

BinMatrix companion(const Poly& f) {
    const std::size_t d = f.size() - 1;
    BinMatrix c(d, d);
    for (std::size_t j = 0; j + 1 < d; ++j) c.set(j + 1, j, true);
    for (std::size_t i = 0; i < d; ++i)
        if (f[i]) c.set(i, d - 1, true);
    return c;
}

struct RcfPart {
    std::vector<Poly> factors;  // descending divisibility (largest first)
    BinMatrix transform;
};

RcfPart rcf(const BinMatrix& a) {
    const std::size_t n = a.rows();
    auto [v, mu] = max_order_vector(a);
    const std::size_t d = std::size_t(poly::degree(mu));

    std::vector<BinVector> krylov{v};
    for (std::size_t i = 1; i < d; ++i) krylov.push_back(mul(a, krylov.back()));

    if (d == n) {
        return {{mu}, inverse(columns_to_matrix(krylov, n))};
    }

    // Dual vector u whose scalar sequence u^T A^i v has generator mu; its
    // Krylov annihilator is then an A-invariant complement of span(krylov).
    std::vector<BinVector> iterates{v};
    for (std::size_t i = 1; i < 2 * n; ++i) iterates.push_back(mul(a, iterates.back()));
    BinMatrix at = transpose(a);

    auto coord_seq = [&](std::size_t j) {
        std::vector<uint8_t> s(iterates.size());
        for (std::size_t i = 0; i < iterates.size(); ++i) s[i] = iterates[i].get(j);
        return s;
    };
    BinVector u(n);
    u.set(0, true);
    Poly gen = sequence_generator(coord_seq(0));
    for (std::size_t j = 1; j < n && gen.size() <= d; ++j) {
        BinVector ej(n);
        ej.set(j, true);
        merge_orders(at, u, gen, ej, sequence_generator(coord_seq(j)));
    }
    if (poly::degree(gen) != int(d))
        throw std::logic_error("rcf: dual sequence generator fell short of the minimal polynomial");

    BinMatrix perp_rows(d, n);
    BinVector ui = u;
    for (std::size_t i = 0; i < d; ++i) {
        perp_rows.set_row(i, ui);
        ui = mul(at, ui);
    }
    std::vector<BinVector> w_basis = null_space(perp_rows);
    if (w_basis.size() != n - d) throw std::logic_error("rcf: complement has wrong dimension");

    std::vector<BinVector> s_cols = krylov;
    s_cols.insert(s_cols.end(), w_basis.begin(), w_basis.end());
    BinMatrix s = columns_to_matrix(s_cols, n);
    BinMatrix s_inv = inverse(s);  // throws when the pairing degenerates (cannot happen)

    BinMatrix a_sub(n - d, n - d);
    for (std::size_t k = 0; k < w_basis.size(); ++k) {
        BinVector y = mul(s_inv, mul(a, w_basis[k]));
        for (std::size_t i = 0; i < d; ++i)
            if (y.get(i)) throw std::logic_error("rcf: complement is not invariant");
        for (std::size_t i = d; i < n; ++i) a_sub.set(i - d, k, y.get(i));
    }

    RcfPart sub = rcf(a_sub);
    BinMatrix t(n, n);
    insert_block(t, BinMatrix::identity(d), 0, 0);
    insert_block(t, sub.transform, d, d);
    RcfPart out;
    out.transform = mul(t, s_inv);
    out.factors.push_back(mu);
    out.factors.insert(out.factors.end(), sub.factors.begin(), sub.factors.end());
    return out;
}

}  // namespace

std::vector<uint8_t> minimal_polynomial(const BinMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("minimal_polynomial: matrix not square");
    return max_order_vector(a).second;
}

std::vector<uint8_t> characteristic_polynomial(const BinMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("characteristic_polynomial: not square");
    const std::size_t n = a.rows();
    BinMatrix h = a;
    // Similarity reduction to upper Hessenberg (paired row/column ops).
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && !h.get(pivot, j)) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            h.swap_rows(pivot, j + 1);
            for (std::size_t r = 0; r < n; ++r) {
                bool tmp = h.get(r, pivot);
                h.set(r, pivot, h.get(r, j + 1));
                h.set(r, j + 1, tmp);
            }
        }
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h.get(r, j)) {
                h.xor_rows(r, j + 1);
                for (std::size_t i = 0; i < n; ++i)
                    if (h.get(i, r)) h.flip(i, j + 1);
            }
        }
    }
    // det(xI - H) by the Hessenberg leading-minor recurrence.
    std::vector<Poly> p(n + 1);
    p[0] = poly::one();
    for (std::size_t k = 1; k <= n; ++k) {
        Poly xk = poly::x();
        if (h.get(k - 1, k - 1)) xk = poly::add(xk, poly::one());
        p[k] = poly::mul(xk, p[k - 1]);
        bool prod = true;
        for (std::size_t m = 1; m < k; ++m) {
            prod = prod && h.get(k - m, k - m - 1);
            if (!prod) break;
            if (h.get(k - m - 1, k - 1)) p[k] = poly::add(p[k], p[k - m - 1]);
        }
    }
    return p[n];
}

FrobeniusForm frobenius_form(const BinMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("frobenius_form: matrix not square");
    const std::size_t n = a.rows();
    RcfPart part = rcf(a);

    // Reorder blocks to the ascending divisibility chain f_1 | ... | f_s.
    std::vector<Poly> asc(part.factors.rbegin(), part.factors.rend());
    std::vector<std::size_t> perm(n);
    {
        // Old layout: descending blocks in order; new layout: reversed.
        std::vector<std::size_t> new_offsets(part.factors.size());
        std::size_t off = 0;
        for (std::size_t b = part.factors.size(); b-- > 0;) {
            new_offsets[b] = off;
            off += std::size_t(poly::degree(part.factors[b]));
        }
        std::size_t old_off = 0;
        for (std::size_t b = 0; b < part.factors.size(); ++b) {
            std::size_t sz = std::size_t(poly::degree(part.factors[b]));
            for (std::size_t i = 0; i < sz; ++i) perm[old_off + i] = new_offsets[b] + i;
            old_off += sz;
        }
    }
    BinMatrix pi = BinMatrix::permutation(perm);

    FrobeniusForm out;
    out.transform = mul(pi, part.transform);
    out.form = BinMatrix(n, n);
    std::size_t off = 0;
    for (const Poly& f : asc) {
        insert_block(out.form, companion(f), off, off);
        off += std::size_t(poly::degree(f));
        out.invariant_factors.push_back(f);
    }
    if (mul(out.transform, a) != mul(out.form, out.transform))
        throw std::logic_error("frobenius_form: transform post-condition failed");
    return out;
}

std::optional<BinMatrix> conjugator(const BinMatrix& a, const BinMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("conjugator: matrices must be square and of equal size");
    FrobeniusForm fa = frobenius_form(a);
    FrobeniusForm fb = frobenius_form(b);
    if (fa.invariant_factors != fb.invariant_factors) return std::nullopt;
    return mul(inverse(fb.transform), fa.transform);
}

}  // namespace ccdepth
