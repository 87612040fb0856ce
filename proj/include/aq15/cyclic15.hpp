#pragma once

// The cyclic [15, 4.5, 9] additive quaternary code, built from GF(16)
// trace coordinates, together with its verification.

#include <string>
#include <vector>

#include "aq15/addcode.hpp"

namespace aq {

struct PropertyFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// GF(16) = F2(eps) with eps^4 = eps + 1, elements as 4-bit values over
// the basis {1, eps, eps^2, eps^3}.
namespace gf16 {
constexpr uint8_t eps = 0x2;
uint8_t mul(uint8_t a, uint8_t b);
uint8_t pow(uint8_t a, int e);
int trace(uint8_t x);  // x + x^2 + x^4 + x^8, a bit
}  // namespace gf16

// Direct sum C0 + C1 + C2 of binary dimensions 1, 4, 4. C0 is generated
// by the all-(1,1) word; C1 rows (u over a basis of GF(16)) have pair
// (T(u eps^{i+1}), T(u eps^i)) at coordinate i, C2 rows have pair
// (T(u eps^{3i}), T(u eps^{3i+2})).
AdditiveCode build_cyclic_code();

struct CyclicReport {
    bool shift_closed = false;
    int strength = 0;
    int min_distance = 0;
};

// Checks shift-by-one closure of the codeword set, strength 3 of the line
// system, and minimum distance 9. Throws PropertyFailedError naming the
// first failing assertion.
CyclicReport verify_cyclic_properties(const AdditiveCode& c);

// The code with every coordinate pair rotated by the given amount.
AdditiveCode rotate_coordinates(const AdditiveCode& c, int shift);

}  // namespace aq
