#include "aq15/gf2.hpp"

namespace aq {

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.reduced = m;
    BitMatrix& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.ncols() && r < a.nrows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.nrows(); ++i) {
            if (a.get(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(a.row(r), a.row(pivot));
        for (int i = 0; i < a.nrows(); ++i) {
            if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank(const BitMatrix& m) { return rref(m).rank; }

bool in_row_span(const BitMatrix& m, uint64_t v) {
    RrefResult rr = rref(m);
    for (int i = 0; i < rr.rank; ++i) {
        int p = rr.pivots[i];
        if ((v >> p) & 1) v ^= rr.reduced.row(i);
    }
    return v == 0;
}

BitMatrix null_space(const BitMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (int p : rr.pivots) is_pivot[p] = true;
    BitMatrix basis(0, m.ncols());
    basis = BitMatrix(0, m.ncols());
    for (int c = 0; c < m.ncols(); ++c) {
        if (is_pivot[c]) continue;
        uint64_t v = uint64_t(1) << c;
        for (int i = 0; i < rr.rank; ++i) {
            if (rr.reduced.get(i, c)) v |= uint64_t(1) << rr.pivots[i];
        }
        basis.append_row(v);
    }
    return basis;
}

BitMatrix eliminate_top(const BitMatrix& g, const std::vector<int>& cols, int top_rows) {
    const int k = static_cast<int>(cols.size());
    const int nbot = g.nrows() - top_rows;
    if (k == 0 || top_rows == 0) return g;
    if (nbot < k) throw RankDeficientError("bottom block has fewer rows than columns to eliminate");

    // Restrict the bottom rows to cols and augment with the bottom-row
    // identity so elimination records which original rows combine to the
    // unit vectors.
    BitMatrix work(k + nbot, std::vector<uint64_t>(nbot, 0));
    for (int i = 0; i < nbot; ++i) {
        uint64_t w = 0;
        for (int j = 0; j < k; ++j)
            if (g.get(top_rows + i, cols[j])) w |= uint64_t(1) << j;
        work.row(i) = w | (uint64_t(1) << (k + i));
    }
    RrefResult rr = rref(work);
    // Full column rank on the first k columns means pivots 0..k-1 are all
    // among cols.
    if (rr.rank < k || rr.pivots.size() < size_t(k)) throw RankDeficientError("selected columns not of full rank in bottom block");
    for (int j = 0; j < k; ++j)
        if (rr.pivots[j] != j) throw RankDeficientError("selected columns not of full rank in bottom block");

    // combo[j] = set of bottom rows summing to unit vector e_j on cols.
    std::vector<uint64_t> combo_full(k, 0);
    for (int j = 0; j < k; ++j) {
        uint64_t sel = rr.reduced.row(j) >> k;
        uint64_t full = 0;
        for (int i = 0; i < nbot; ++i)
            if ((sel >> i) & 1) full ^= g.row(top_rows + i);
        combo_full[j] = full;
    }

    BitMatrix out = g;
    for (int t = 0; t < top_rows; ++t) {
        for (int j = 0; j < k; ++j)
            if (out.get(t, cols[j])) out.row(t) ^= combo_full[j];
    }
    return out;
}

}  // namespace aq
