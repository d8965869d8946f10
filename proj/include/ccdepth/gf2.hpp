#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccdepth {

struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Bit-packed vector over GF(2). Padding bits beyond len are kept zero.
class BinVector {
  public:
    BinVector() = default;
    explicit BinVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BinVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    bool dot(const BinVector& other) const {
        uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return __builtin_popcountll(acc) & 1;
    }

    friend bool operator==(const BinVector& a, const BinVector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BinVector& a, const BinVector& b) { return !(a == b); }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

// Bit-packed row-major binary matrix. All arithmetic is exact mod 2; the row
// XOR is the workhorse primitive. Padding bits past cols are always zero.
class BinMatrix {
  public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BinMatrix identity(std::size_t n);
    static BinMatrix zero(std::size_t rows, std::size_t cols) { return BinMatrix(rows, cols); }
    // Permutation matrix P with P e_j = e_{perm[j]} (i.e. entry(perm[j], j) = 1).
    static BinMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t mask = uint64_t(1) << (j & 63);
        if (v)
            data_[i * wpr_ + (j >> 6)] |= mask;
        else
            data_[i * wpr_ + (j >> 6)] &= ~mask;
    }
    void flip(std::size_t i, std::size_t j) {
        data_[i * wpr_ + (j >> 6)] ^= uint64_t(1) << (j & 63);
    }

    // row_dst += row_src (mod 2)
    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = &data_[dst * wpr_];
        const uint64_t* s = &data_[src * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
    }

    BinVector row(std::size_t i) const;
    void set_row(std::size_t i, const BinVector& v);
    BinVector col(std::size_t j) const;
    void set_col(std::size_t j, const BinVector& v);

    bool row_is_zero(std::size_t i) const {
        const uint64_t* r = &data_[i * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w)
            if (r[w]) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const BinMatrix& a, const BinMatrix& b) { return !(a == b); }

    const uint64_t* row_words(std::size_t i) const { return &data_[i * wpr_]; }
    uint64_t* row_words(std::size_t i) { return &data_[i * wpr_]; }
    std::size_t words_per_row() const { return wpr_; }

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

BinMatrix mul(const BinMatrix& a, const BinMatrix& b);
BinVector mul(const BinMatrix& a, const BinVector& v);
BinMatrix add(const BinMatrix& a, const BinMatrix& b);
BinMatrix inverse(const BinMatrix& a);
std::size_t rank(const BinMatrix& a);
std::size_t weight(const BinMatrix& a);
BinMatrix transpose(const BinMatrix& a);
BinMatrix anti_transpose(const BinMatrix& a);

// Block helpers: extract/insert sub-matrices (half-open ranges).
BinMatrix submatrix(const BinMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                    std::size_t c1);
void insert_block(BinMatrix& dst, const BinMatrix& block, std::size_t r0, std::size_t c0);
BinMatrix direct_sum(const BinMatrix& a, const BinMatrix& b);

// Solve A x = b. Returns nullopt when inconsistent. When the system is
// underdetermined an arbitrary (deterministic) solution is returned; the
// kernel basis of A comes from null_space.
std::optional<BinVector> solve(const BinMatrix& a, const BinVector& b);
std::vector<BinVector> null_space(const BinMatrix& a);

// Frobenius (rational canonical) form: F block-diagonal companion matrices of
// the invariant factors f_1 | f_2 | ... | f_s, together with invertible T
// such that T A T^-1 = F. F is canonical, T is deterministic.
struct FrobeniusForm {
    BinMatrix form;
    BinMatrix transform;
    // Invariant factors in ascending divisibility order; each entry lists the
    // polynomial coefficients c_0..c_d (c_d = 1).
    std::vector<std::vector<uint8_t>> invariant_factors;
};
FrobeniusForm frobenius_form(const BinMatrix& a);

// Minimal polynomial coefficients c_0..c_d (monic, c_d = 1).
std::vector<uint8_t> minimal_polynomial(const BinMatrix& a);
std::vector<uint8_t> characteristic_polynomial(const BinMatrix& a);

// T with T A T^-1 = B when A and B are conjugate; nullopt otherwise.
std::optional<BinMatrix> conjugator(const BinMatrix& a, const BinMatrix& b);

// Uniform invertible matrix by rejection sampling (expected < 4 attempts;
// the invertible fraction over GF(2) exceeds prod(1 - 2^-i) > 0.288).
// Deterministic per seed.
BinMatrix random_invertible(std::size_t n, uint64_t seed);
BinMatrix random_invertible(std::size_t n, std::mt19937_64& rng);
BinMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// Matrix text format: optional '#' comment lines, then one line per row of
// '0'/'1' characters. Ragged rows are rejected.
BinMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const BinMatrix& a);

}  // namespace ccdepth
