#include "aq15/addcode.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aq {

namespace {

uint64_t pair_mask(int n) { return BitVector::mask(2 * n) & 0x5555555555555555ull; }

uint64_t gray_codeword(const BitMatrix& gen, uint64_t index) {
    uint64_t g = index ^ (index >> 1);
    uint64_t w = 0;
    for (int r = 0; r < gen.nrows(); ++r)
        if ((g >> r) & 1) w ^= gen.row(r);
    return w;
}

}  // namespace

int quaternary_weight(QuaternaryWord w, int n) {
    return popcount64((w | (w >> 1)) & pair_mask(n));
}

AdditiveCode::AdditiveCode(int n, BitMatrix g) : n(n), dim2(g.nrows()), gen(std::move(g)) {
    if (gen.ncols() != 2 * n) throw std::invalid_argument("generator must have 2n columns");
    if (rank(gen) != dim2) throw std::invalid_argument("generator is not full rank");
}

QuaternaryWord AdditiveCode::codeword(uint64_t message) const {
    uint64_t w = 0;
    for (int r = 0; r < dim2; ++r)
        if ((message >> r) & 1) w ^= gen.row(r);
    return w;
}

namespace {

int min_distance_range(const AdditiveCode& c, uint64_t lo, uint64_t hi) {
    // Gray-code walk over indices [lo, hi): codeword(gray(i)) changes by
    // one generator row per step.
    const uint64_t pm = pair_mask(c.n);
    uint64_t w = gray_codeword(c.gen, lo);
    int best = c.n + 1;
    for (uint64_t i = lo; i < hi; ++i) {
        if (uint64_t g = i ^ (i >> 1); g != 0)
            best = std::min(best, popcount64((w | (w >> 1)) & pm));
        w ^= c.gen.row(std::countr_zero(i + 1) % c.dim2);
    }
    return best;
}

}  // namespace

int min_distance_serial(const AdditiveCode& c) {
    return min_distance_range(c, 0, uint64_t(1) << c.dim2);
}

int min_distance(const AdditiveCode& c) {
    const uint64_t count = uint64_t(1) << c.dim2;
    if (c.dim2 < 16) return min_distance_serial(c);
    int best = c.n + 1;
#ifdef _OPENMP
#pragma omp parallel reduction(min : best)
    {
        const int nt = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const uint64_t chunk = count / nt;
        const uint64_t lo = tid * chunk;
        const uint64_t hi = (tid == nt - 1) ? count : lo + chunk;
        best = std::min(best, min_distance_range(c, lo, hi));
    }
#else
    best = min_distance_range(c, 0, count);
#endif
    return best;
}

namespace {

// Echelon accumulator for incremental rank.
struct Echelon {
    std::vector<uint64_t> rows;
    bool insert(uint64_t v) {
        for (uint64_t r : rows) v = std::min(v, v ^ r);
        if (v == 0) return false;
        rows.push_back(v);
        return true;
    }
};

bool all_subsets_general(const LineSystem& ls, int t, size_t start, int depth,
                         const Echelon& basis) {
    if (depth == t) return true;
    for (size_t i = start; i + size_t(t - depth) <= ls.lines.size(); ++i) {
        Echelon b = basis;
        if (!b.insert(ls.lines[i].rep_a()) || !b.insert(ls.lines[i].rep_b())) return false;
        if (!all_subsets_general(ls, t, i + 1, depth + 1, b)) return false;
    }
    return true;
}

}  // namespace

int strength(const LineSystem& ls) {
    const int n = static_cast<int>(ls.lines.size());
    for (int t = 1; t <= n; ++t) {
        if (!all_subsets_general(ls, t, 0, 0, Echelon{})) return t - 1;
    }
    return n;
}

namespace {

BitMatrix drop_pair(const BitMatrix& gen, int coord) {
    BitMatrix out(gen.nrows(), gen.ncols() - 2);
    for (int r = 0; r < gen.nrows(); ++r) {
        uint64_t v = gen.row(r);
        uint64_t low = v & BitVector::mask(2 * coord);
        uint64_t high = (v >> (2 * coord + 2)) << (2 * coord);
        out.row(r) = low | high;
    }
    return out;
}

}  // namespace

AdditiveCode puncture(const AdditiveCode& c, int coord) {
    if (coord < 0 || coord >= c.n) throw std::invalid_argument("coordinate out of range");
    BitMatrix g = drop_pair(c.gen, coord);
    if (rank(g) != c.dim2) throw DegenerateResultError("puncturing drops the generator rank");
    return AdditiveCode(c.n - 1, std::move(g));
}

AdditiveCode shorten(const AdditiveCode& c, int coord) {
    if (coord < 0 || coord >= c.n) throw std::invalid_argument("coordinate out of range");
    // Messages whose codeword vanishes on the pair: kernel of the 2 x dim2
    // map m -> (m . colA, m . colB).
    BitMatrix cols(c.dim2,
                   std::vector<uint64_t>{c.gen.column(2 * coord), c.gen.column(2 * coord + 1)});
    BitMatrix messages = null_space(cols);
    BitMatrix g(messages.nrows(), 2 * c.n);
    for (int r = 0; r < messages.nrows(); ++r) g.row(r) = c.codeword(messages.row(r));
    return AdditiveCode(c.n - 1, drop_pair(g, coord));
}

AdditiveCode symplectic_dual(const AdditiveCode& c) {
    // <u,v> = sum a_i d_i + b_i c_i: dual = kernel of the generator with
    // the two columns of every pair swapped.
    BitMatrix swapped(c.dim2, 2 * c.n);
    for (int r = 0; r < c.dim2; ++r) {
        uint64_t v = c.gen.row(r);
        uint64_t even = v & 0x5555555555555555ull;
        uint64_t odd = v & 0xaaaaaaaaaaaaaaaaull;
        swapped.row(r) = (even << 1) | (odd >> 1);
    }
    return AdditiveCode(c.n, null_space(swapped));
}

DualDistance dual_distance(const AdditiveCode& c) {
    AdditiveCode dual = symplectic_dual(c);
    if (dual.dim2 == 0) return {0, false};
    if (dual.dim2 <= 20) return {min_distance(dual), false};
    return {strength(to_line_system(c)) + 1, true};
}

BitMatrix concat_binary(const AdditiveCode& c) {
    BitMatrix out(c.dim2, 3 * c.n);
    for (int r = 0; r < c.dim2; ++r)
        for (int i = 0; i < c.n; ++i) {
            bool a = c.gen.get(r, 2 * i);
            bool b = c.gen.get(r, 2 * i + 1);
            out.set(r, 3 * i, a);
            out.set(r, 3 * i + 1, b);
            out.set(r, 3 * i + 2, a ^ b);
        }
    return out;
}

int binary_min_weight(const BitMatrix& gen) {
    const uint64_t count = uint64_t(1) << gen.nrows();
    uint64_t w = 0;
    int best = gen.ncols() + 1;
    for (uint64_t i = 0; i < count; ++i) {
        if ((i ^ (i >> 1)) != 0) best = std::min(best, popcount64(w));
        if (i + 1 < count) w ^= gen.row(std::countr_zero(i + 1));
    }
    return best;
}

LineSystem to_line_system(const AdditiveCode& c) {
    LineSystem ls;
    ls.ambient_dim = c.dim2 - 1;
    for (int i = 0; i < c.n; ++i) {
        uint32_t a = static_cast<uint32_t>(c.gen.column(2 * i));
        uint32_t b = static_cast<uint32_t>(c.gen.column(2 * i + 1));
        if (a == 0 || b == 0 || a == b)
            throw DegenerateLineError("dependent column pair at coordinate " + std::to_string(i));
        ls.lines.emplace_back(a, b);
    }
    return ls;
}

std::string format_code(const AdditiveCode& c) {
    std::ostringstream out;
    out << "additive n=" << c.n << " dim2=" << c.dim2 << "\n";
    for (int r = 0; r < c.dim2; ++r) {
        for (int i = 0; i < c.n; ++i) {
            if (i) out << ' ';
            out << (c.gen.get(r, 2 * i) ? '1' : '0') << (c.gen.get(r, 2 * i + 1) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

AdditiveCode parse_code(std::istream& in) {
    std::string line;
    int n = -1, dim2 = -1;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("empty generator file");
    if (std::sscanf(line.c_str(), "additive n=%d dim2=%d", &n, &dim2) != 2 || n <= 0 || dim2 <= 0)
        throw std::invalid_argument("bad header: " + line);
    BitMatrix g(dim2, 2 * n);
    for (int r = 0; r < dim2; ++r) {
        if (!next_line()) throw std::invalid_argument("missing generator row");
        int col = 0;
        for (char ch : line) {
            if (ch == '0' || ch == '1') {
                if (col >= 2 * n) throw std::invalid_argument("row too long: " + line);
                g.set(r, col++, ch == '1');
            } else if (ch != ' ' && ch != '\t' && ch != '\r') {
                throw std::invalid_argument("bad character in row: " + line);
            }
        }
        if (col != 2 * n) throw std::invalid_argument("row too short: " + line);
    }
    return AdditiveCode(n, std::move(g));
}

AdditiveCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

}  // namespace aq
