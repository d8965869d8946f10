#include "ccdepth/gf2.hpp"

#include <sstream>

namespace ccdepth {

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::permutation(const std::vector<std::size_t>& perm) {
    BinMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m.set(perm[j], j, true);
    return m;
}

BinVector BinMatrix::row(std::size_t i) const {
    BinVector v(cols_);
    for (std::size_t w = 0; w < wpr_; ++w) v.words()[w] = data_[i * wpr_ + w];
    return v;
}

void BinMatrix::set_row(std::size_t i, const BinVector& v) {
    for (std::size_t w = 0; w < wpr_; ++w) data_[i * wpr_ + w] = v.words()[w];
}

BinVector BinMatrix::col(std::size_t j) const {
    BinVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (get(i, j)) v.set(i, true);
    return v;
}

void BinMatrix::set_col(std::size_t j, const BinVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) set(i, j, v.get(i));
}

bool BinMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j) != (i == j)) return false;
    return true;
}

bool BinMatrix::is_zero() const {
    for (uint64_t w : data_)
        if (w) return false;
    return true;
}

bool BinMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

BinMatrix mul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    BinMatrix c(a.rows(), b.cols());
    const std::size_t wpr = b.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* ci = c.row_words(i);
        const uint64_t* ai = a.row_words(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            uint64_t bits = ai[w];
            while (bits) {
                std::size_t k = w * 64 + std::size_t(__builtin_ctzll(bits));
                bits &= bits - 1;
                const uint64_t* bk = b.row_words(k);
                for (std::size_t u = 0; u < wpr; ++u) ci[u] ^= bk[u];
            }
        }
    }
    return c;
}

BinVector mul(const BinMatrix& a, const BinVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mul: dimension mismatch");
    BinVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t acc = 0;
        const uint64_t* ai = a.row_words(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) acc ^= ai[w] & v.words()[w];
        out.set(i, __builtin_popcountll(acc) & 1);
    }
    return out;
}

BinMatrix add(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: dimension mismatch");
    BinMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* ci = c.row_words(i);
        const uint64_t* bi = b.row_words(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) ci[w] ^= bi[w];
    }
    return c;
}

BinMatrix inverse(const BinMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = a.rows();
    // Gauss-Jordan on [A | I], pivot searched down the column.
    BinMatrix work = a;
    BinMatrix inv = BinMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) ++pivot;
        if (pivot == n) throw SingularMatrixError("inverse: singular matrix");
        work.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && work.get(r, col)) {
                work.xor_rows(r, col);
                inv.xor_rows(r, col);
            }
        }
    }
    return inv;
}

std::size_t rank(const BinMatrix& a) {
    BinMatrix work = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, col)) ++pivot;
        if (pivot == work.rows()) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = pivot + 1; i < work.rows(); ++i)
            if (work.get(i, col)) work.xor_rows(i, r);
        ++r;
    }
    return r;
}

std::size_t weight(const BinMatrix& a) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const uint64_t* ri = a.row_words(i);
        for (std::size_t u = 0; u < a.words_per_row(); ++u)
            w += std::size_t(__builtin_popcountll(ri[u]));
    }
    return w;
}

BinMatrix transpose(const BinMatrix& a) {
    BinMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const uint64_t* ri = a.row_words(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            uint64_t bits = ri[w];
            while (bits) {
                std::size_t j = w * 64 + std::size_t(__builtin_ctzll(bits));
                bits &= bits - 1;
                t.set(j, i, true);
            }
        }
    }
    return t;
}

BinMatrix anti_transpose(const BinMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("anti_transpose: matrix not square");
    const std::size_t n = a.rows();
    BinMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.get(i, j)) r.set(n - 1 - j, n - 1 - i, true);
    return r;
}

BinMatrix submatrix(const BinMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                    std::size_t c1) {
    BinMatrix s(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            if (a.get(i, j)) s.set(i - r0, j - c0, true);
    return s;
}

void insert_block(BinMatrix& dst, const BinMatrix& block, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) dst.set(r0 + i, c0 + j, block.get(i, j));
}

BinMatrix direct_sum(const BinMatrix& a, const BinMatrix& b) {
    BinMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
    insert_block(s, a, 0, 0);
    insert_block(s, b, a.rows(), a.cols());
    return s;
}

std::optional<BinVector> solve(const BinMatrix& a, const BinVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    BinMatrix work(m, n + 1);
    insert_block(work, a, 0, 0);
    for (std::size_t i = 0; i < m; ++i) work.set(i, n, b.get(i));

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t pivot = r;
        while (pivot < m && !work.get(pivot, col)) ++pivot;
        if (pivot == m) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && work.get(i, col)) work.xor_rows(i, r);
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (work.get(i, n)) return std::nullopt;

    BinVector x(n);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x.set(pivot_col[i], work.get(i, n));
    return x;
}

std::vector<BinVector> null_space(const BinMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    BinMatrix work = a;
    std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t pivot = r;
        while (pivot < m && !work.get(pivot, col)) ++pivot;
        if (pivot == m) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && work.get(i, col)) work.xor_rows(i, r);
        pivot_of_col[col] = std::ptrdiff_t(r);
        ++r;
    }
    std::vector<BinVector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        BinVector v(n);
        v.set(free_col, true);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0 && work.get(std::size_t(pivot_of_col[col]), free_col))
                v.set(col, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BinMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BinMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        uint64_t* ri = m.row_words(i);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) ri[w] = rng();
        // keep padding bits zero
        std::size_t tail = cols & 63;
        if (tail) ri[m.words_per_row() - 1] &= (uint64_t(1) << tail) - 1;
    }
    return m;
}

BinMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("random_invertible: n must be >= 1");
    for (;;) {
        BinMatrix m = random_matrix(n, n, rng);
        if (rank(m) == n) return m;
    }
}

BinMatrix random_invertible(std::size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_invertible(n, rng);
}

BinMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (char c : line)
            if (c != '0' && c != '1')
                throw std::invalid_argument("parse_matrix: invalid character at line " +
                                            std::to_string(lineno));
        if (!rows.empty() && line.size() != rows.front().size())
            throw std::invalid_argument("parse_matrix: ragged row at line " +
                                        std::to_string(lineno));
        rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("parse_matrix: no rows");
    BinMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == '1') m.set(i, j, true);
    return m;
}

std::string serialize_matrix(const BinMatrix& a) {
    std::string out;
    out.reserve(a.rows() * (a.cols() + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace ccdepth
