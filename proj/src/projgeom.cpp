#include "aq15/projgeom.hpp"

#include <algorithm>

namespace aq {

PGLine::PGLine(PGPoint a, PGPoint b) {
    if (a == 0 || b == 0 || a == b) throw DegenerateLineError("line needs two distinct nonzero points");
    pts = {a, b, a ^ b};
    std::sort(pts.begin(), pts.end());
}

std::vector<PGPoint> LineSystem::codepoints() const {
    std::vector<PGPoint> pts;
    pts.reserve(lines.size() * 3);
    for (const auto& l : lines) {
        pts.push_back(l.pts[0]);
        pts.push_back(l.pts[1]);
        pts.push_back(l.pts[2]);
    }
    return pts;
}

namespace {

// All elements of the span of the basis (including 0).
std::vector<uint32_t> span_of(const std::vector<uint32_t>& basis) {
    std::vector<uint32_t> span{0};
    span.reserve(size_t(1) << basis.size());
    for (uint32_t b : basis) {
        size_t sz = span.size();
        for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ b);
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

}  // namespace

int subspace_weight(const LineSystem& ls, const std::vector<uint32_t>& basis) {
    auto span = span_of(basis);
    int w = 0;
    for (PGPoint p : ls.codepoints())
        if (std::binary_search(span.begin(), span.end(), p)) ++w;
    return w;
}

FactorWeights factor_weights(const LineSystem& ls, const std::vector<uint32_t>& u_basis) {
    const int width = ls.vec_width();
    BitMatrix u(width, std::vector<uint64_t>(u_basis.begin(), u_basis.end()));
    RrefResult rr = rref(u);

    std::vector<bool> is_pivot(width, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    FactorWeights fw;
    fw.factor_width = width - rr.rank;
    fw.weight.assign(size_t(1) << fw.factor_width, 0);

    auto project = [&](uint32_t v) -> uint32_t {
        for (int i = 0; i < rr.rank; ++i)
            if ((v >> rr.pivots[i]) & 1) v ^= uint32_t(rr.reduced.row(i));
        // Drop pivot coordinates; what remains indexes the factor space.
        uint32_t out = 0;
        int bit = 0;
        for (int c = 0; c < width; ++c) {
            if (is_pivot[c]) continue;
            out |= ((v >> c) & 1u) << bit;
            ++bit;
        }
        return out;
    };

    for (PGPoint p : ls.codepoints()) {
        ++fw.total;
        uint32_t q = project(p);
        if (q == 0)
            ++fw.weight_in_u;
        else
            ++fw.weight[q];
    }
    return fw;
}

std::vector<int> averaging_bounds(int total, int hyperplane_max, int ambient_dim) {
    std::vector<int> bounds;
    int prev = std::min(hyperplane_max, total);
    bounds.push_back(prev);
    for (int c = 2; c <= ambient_dim / 2; ++c) {
        // w*(2^c - 1) + (total - w) <= (2^c - 1)*prev
        const long long levels = (1LL << c) - 1;
        long long w = (levels * prev - total) / (levels - 1);
        w = std::min<long long>(w, total);
        bounds.push_back(static_cast<int>(w));
        prev = static_cast<int>(w);
    }
    return bounds;
}

HyperplaneProfile hyperplane_line_profile(const LineSystem& ls) {
    HyperplaneProfile prof;
    const uint32_t npts = (1u << ls.vec_width()) - 1;
    auto pts = ls.codepoints();
    for (uint32_t h = 1; h <= npts; ++h) {
        HyperplaneProfile::Entry e{h, 0, 0};
        for (const auto& l : ls.lines) {
            if (parity64(h & l.pts[0]) == 0 && parity64(h & l.pts[1]) == 0) ++e.lines_inside;
        }
        for (PGPoint p : pts)
            if (parity64(h & p) == 0) ++e.weight;
        prof.max_weight = std::max(prof.max_weight, e.weight);
        prof.max_lines = std::max(prof.max_lines, e.lines_inside);
        prof.entries.push_back(e);
    }
    return prof;
}

namespace {

// Point permutations of PG(2,2) induced by GL(3,2), all 168 of them.
const std::vector<std::array<int, 8>>& fano_collineations() {
    static const std::vector<std::array<int, 8>> perms = [] {
        std::vector<std::array<int, 8>> out;
        // A matrix is given by the images of the three basis vectors.
        for (int a = 1; a < 8; ++a)
            for (int b = 1; b < 8; ++b)
                for (int c = 1; c < 8; ++c) {
                    if (b == a) continue;
                    if (c == a || c == b || c == (a ^ b)) continue;
                    std::array<int, 8> perm{};
                    for (int v = 1; v < 8; ++v) {
                        int img = 0;
                        if (v & 1) img ^= a;
                        if (v & 2) img ^= b;
                        if (v & 4) img ^= c;
                        perm[v] = img;
                    }
                    out.push_back(perm);
                }
        return out;
    }();
    return perms;
}

FanoProfile canonical_fano(const FanoProfile& p) {
    FanoProfile best = p;
    for (const auto& perm : fano_collineations()) {
        FanoProfile q{};
        for (int v = 1; v < 8; ++v) q[perm[v]] = p[v];
        if (q < best) best = q;
    }
    return best;
}

}  // namespace

std::set<FanoProfile> fano_profile_oracle(int total, int line_cap, int point_cap) {
    std::set<FanoProfile> profiles;
    const int base = point_cap + 1;
    long long count = 1;
    for (int i = 0; i < 7; ++i) count *= base;

    for (long long idx = 0; idx < count; ++idx) {
        FanoProfile w{};
        long long x = idx;
        int sum = 0;
        for (int v = 1; v < 8; ++v) {
            w[v] = static_cast<int>(x % base);
            sum += w[v];
            x /= base;
        }
        if (sum != total) continue;
        bool ok = true;
        for (int a = 1; a < 8 && ok; ++a)
            for (int b = a + 1; b < 8 && ok; ++b) {
                int c = a ^ b;
                if (c < b) continue;  // visit each line once
                if (w[a] + w[b] + w[c] > line_cap) ok = false;
            }
        if (ok) profiles.insert(canonical_fano(w));
    }
    return profiles;
}

bool fano_low_points_collinear(const FanoProfile& p, int low_weight) {
    std::vector<int> low;
    for (int v = 1; v < 8; ++v)
        if (p[v] == low_weight) low.push_back(v);
    if (low.size() != 3) return false;
    return (low[0] ^ low[1]) == low[2];
}

}  // namespace aq
