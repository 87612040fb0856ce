#pragma once

// Incidence and weight calculus in the binary projective spaces PG(m,2).
// Points are nonzero bit vectors of width m+1, stored as plain integers.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "aq15/gf2.hpp"

namespace aq {

struct DegenerateLineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using PGPoint = uint32_t;  // nonzero coordinate vector

// A line of PG(m,2): three points {a, b, a^b}. Canonical representative
// pair = the two smallest of the three points.
struct PGLine {
    std::array<PGPoint, 3> pts{};  // sorted ascending

    PGLine() = default;
    PGLine(PGPoint a, PGPoint b);

    PGPoint rep_a() const { return pts[0]; }
    PGPoint rep_b() const { return pts[1]; }
    bool contains(PGPoint p) const { return p == pts[0] || p == pts[1] || p == pts[2]; }
    auto operator<=>(const PGLine&) const = default;
};

// Multiset of lines of PG(m,2) together with the induced codepoint
// multiset (three points per line, with multiplicity).
struct LineSystem {
    int ambient_dim = 0;  // projective dimension m; vectors have width m+1
    std::vector<PGLine> lines;

    int vec_width() const { return ambient_dim + 1; }
    // Codepoints with multiplicity, 3 per line.
    std::vector<PGPoint> codepoints() const;
};

// Number of codepoints of ls inside the span of the given (independent)
// basis vectors, with multiplicity.
int subspace_weight(const LineSystem& ls, const std::vector<uint32_t>& basis);

// Point weights on the factor space mod U. The map is indexed by the
// factor-space point value (width = ambient width - dim U); weight of P is
// the number of codepoints in the preimage of P that are not in U.
struct FactorWeights {
    int factor_width = 0;                 // vector width of the factor space
    std::vector<int> weight;              // size 2^factor_width, index 0 unused
    int weight_in_u = 0;                  // codepoints inside U
    int total = 0;                        // all codepoints
};
FactorWeights factor_weights(const LineSystem& ls, const std::vector<uint32_t>& u_basis);

// Maximum subspace weights per codimension obtained by the averaging
// argument: a codim-c subspace S lies in 2^c - 1 subspaces of codim c-1,
// and every outside point lies in exactly one of them. Entry c-1 of the
// result is the codim-c maximum; codimensions run 1 .. ambient_dim/2.
std::vector<int> averaging_bounds(int total, int hyperplane_max, int ambient_dim);

struct HyperplaneProfile {
    struct Entry {
        uint32_t normal;
        int lines_inside;
        int weight;
    };
    std::vector<Entry> entries;  // one per nonzero normal vector
    int max_weight = 0;
    int max_lines = 0;
};
HyperplaneProfile hyperplane_line_profile(const LineSystem& ls);

// Fano-plane weight-profile enumeration: all assignments of weights
// 0..point_cap to the 7 points of PG(2,2) with the given total and with
// every line weight <= line_cap, collected up to plane automorphisms.
// A profile is the weight vector indexed by point 1..7, canonicalized to
// the lexicographic minimum over the 168 collineations.
using FanoProfile = std::array<int, 8>;  // index by point value 1..7
std::set<FanoProfile> fano_profile_oracle(int total = 32, int line_cap = 14, int point_cap = 5);

// True iff the weight-4 (or generally minimum-weight) support of the
// profile is exactly a line of the Fano plane.
bool fano_low_points_collinear(const FanoProfile& p, int low_weight);

}  // namespace aq
