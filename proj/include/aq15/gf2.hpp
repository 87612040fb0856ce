#pragma once

// Bit-packed linear algebra over GF(2). Vectors are stored in a single
// 64-bit word (widths up to 64 cover everything in this project: generator
// matrices have at most 45 columns, ambient spaces at most 30 dimensions).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aq {

struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parity64(uint64_t x) { return __builtin_parityll(x); }
inline int popcount64(uint64_t x) { return __builtin_popcountll(x); }

struct BitVector {
    int width = 0;
    uint64_t bits = 0;

    BitVector() = default;
    BitVector(int w, uint64_t b) : width(w), bits(b & mask(w)) {
        if (w < 0 || w > 64) throw std::invalid_argument("BitVector width out of range");
    }
    static uint64_t mask(int w) { return w >= 64 ? ~uint64_t(0) : ((uint64_t(1) << w) - 1); }

    bool get(int i) const { return (bits >> i) & 1; }
    void set(int i, bool v) { bits = v ? (bits | (uint64_t(1) << i)) : (bits & ~(uint64_t(1) << i)); }
    bool operator==(const BitVector&) const = default;
};

// Rows of equal width, each packed into one word. Column j of row i is
// bit j of rows[i].
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int nrows, int ncols) : ncols_(check_width(ncols)), rows_(nrows, 0) {}
    BitMatrix(int ncols, std::vector<uint64_t> rows)
        : ncols_(check_width(ncols)), rows_(std::move(rows)) {
        for (auto& r : rows_) r &= BitVector::mask(ncols_);
    }

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    uint64_t row(int i) const { return rows_[i]; }
    uint64_t& row(int i) { return rows_[i]; }
    const std::vector<uint64_t>& rows() const { return rows_; }

    bool get(int i, int j) const { return (rows_[i] >> j) & 1; }
    void set(int i, int j, bool v) {
        rows_[i] = v ? (rows_[i] | (uint64_t(1) << j)) : (rows_[i] & ~(uint64_t(1) << j));
    }

    uint64_t column(int j) const {
        uint64_t c = 0;
        for (int i = 0; i < nrows(); ++i) c |= uint64_t(get(i, j)) << i;
        return c;
    }

    void append_row(uint64_t r) { rows_.push_back(r & BitVector::mask(ncols_)); }

    BitMatrix transposed() const {
        BitMatrix t(ncols_, nrows());
        for (int i = 0; i < nrows(); ++i)
            for (int j = 0; j < ncols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    static int check_width(int w) {
        if (w < 0 || w > 64) throw std::invalid_argument("BitMatrix width out of range");
        return w;
    }
    int ncols_ = 0;
    std::vector<uint64_t> rows_;
};

struct RrefResult {
    int rank = 0;
    BitMatrix reduced;
    std::vector<int> pivots;
};

// Reduced row echelon form with leftmost-lowest pivot selection. The
// reduced matrix is a canonical representative of the row space.
RrefResult rref(const BitMatrix& m);

int rank(const BitMatrix& m);

// True iff v lies in the row space of m.
bool in_row_span(const BitMatrix& m, uint64_t v);

// Basis of { v : m v^T = 0 }, as a matrix with ncols(m) columns.
BitMatrix null_space(const BitMatrix& m);

// Zeroes the entries of rows [0, top_rows) at the given columns by adding
// combinations of the rows below top_rows. Rows >= top_rows are returned
// unchanged. Requires the bottom block restricted to cols to have full
// column rank; throws RankDeficientError otherwise.
BitMatrix eliminate_top(const BitMatrix& g, const std::vector<int>& cols, int top_rows);

}  // namespace aq
