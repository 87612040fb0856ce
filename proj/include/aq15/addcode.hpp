#pragma once

// Additive quaternary codes: a code of length n and binary dimension dim2
// is the row space of a full-rank dim2 x 2n binary generator matrix whose
// columns are grouped in pairs, one pair per quaternary coordinate.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "aq15/gf2.hpp"
#include "aq15/projgeom.hpp"

namespace aq {

struct DegenerateResultError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coordinate i occupies columns/bits 2i (column A) and 2i+1 (column B).
// A codeword is a packed 2n-bit value.
using QuaternaryWord = uint64_t;

int quaternary_weight(QuaternaryWord w, int n);

struct AdditiveCode {
    int n = 0;      // quaternary coordinates
    int dim2 = 0;   // binary dimension (2k)
    BitMatrix gen;  // dim2 x 2n, full rank

    AdditiveCode() = default;
    AdditiveCode(int n, BitMatrix g);

    size_t num_codewords() const { return size_t(1) << dim2; }
    QuaternaryWord codeword(uint64_t message) const;
    bool contains(QuaternaryWord w) const { return in_row_span(gen, w); }
};

// Exhaustive minimum distance, Gray-code enumeration, parallelized over
// codeword ranges. Deterministic.
int min_distance(const AdditiveCode& c);
// Serial Gray-code reference for the benchmark and tests.
int min_distance_serial(const AdditiveCode& c);

// Largest t such that every t lines of the multiset span a subspace of
// binary dimension 2t; 0 if some line is degenerate.
int strength(const LineSystem& ls);

AdditiveCode puncture(const AdditiveCode& c, int coord);
AdditiveCode shorten(const AdditiveCode& c, int coord);

// Dual under the trace/symplectic form <u,v> = sum_i (a_i d_i + b_i c_i).
AdditiveCode symplectic_dual(const AdditiveCode& c);

// Minimum distance of the dual. For small duals this enumerates; for
// dim2(dual) > 20 it uses strength(primal line system) + 1 instead.
struct DualDistance {
    int distance = 0;
    bool via_strength = false;
};
DualDistance dual_distance(const AdditiveCode& c);

// Concatenation with the binary [3,2,2] code: pair (a,b) -> (a,b,a+b).
// Result is the generator of a binary [3n, dim2] code.
BitMatrix concat_binary(const AdditiveCode& c);
int binary_min_weight(const BitMatrix& gen);

// Coordinate i maps to the line spanned by generator columns 2i, 2i+1 in
// PG(dim2-1, 2). Throws DegenerateLineError if some pair is dependent.
LineSystem to_line_system(const AdditiveCode& c);

// Generator matrix text format:
//   additive n=<n> dim2=<d2>
// followed by dim2 lines of 2n characters in {0,1} with a space between
// coordinate pairs; '#' begins a comment. Leftmost char = coordinate 0,
// column A.
std::string format_code(const AdditiveCode& c);
AdditiveCode parse_code(std::istream& in);
AdditiveCode parse_code(const std::string& text);

}  // namespace aq
