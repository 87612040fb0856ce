#include "aq15/cyclic15.hpp"

namespace aq {

namespace gf16 {

uint8_t mul(uint8_t a, uint8_t b) {
    uint16_t acc = 0;
    for (int i = 0; i < 4; ++i)
        if ((b >> i) & 1) acc ^= uint16_t(a) << i;
    // reduce mod x^4 + x + 1
    for (int i = 7; i >= 4; --i)
        if ((acc >> i) & 1) acc ^= uint16_t(0b10011) << (i - 4);
    return static_cast<uint8_t>(acc & 0xf);
}

uint8_t pow(uint8_t a, int e) {
    e %= 15;
    if (e < 0) e += 15;
    uint8_t r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

int trace(uint8_t x) {
    uint8_t x2 = mul(x, x);
    uint8_t x4 = mul(x2, x2);
    uint8_t x8 = mul(x4, x4);
    uint8_t t = x ^ x2 ^ x4 ^ x8;
    return t & 1;
}

}  // namespace gf16

AdditiveCode build_cyclic_code() {
    BitMatrix g(9, 30);
    for (int i = 0; i < 15; ++i) {
        g.set(0, 2 * i, true);
        g.set(0, 2 * i + 1, true);
    }
    for (int b = 0; b < 4; ++b) {
        uint8_t u = uint8_t(1) << b;  // basis element eps^b of the u-space
        for (int i = 0; i < 15; ++i) {
            g.set(1 + b, 2 * i, gf16::trace(gf16::mul(u, gf16::pow(gf16::eps, i + 1))));
            g.set(1 + b, 2 * i + 1, gf16::trace(gf16::mul(u, gf16::pow(gf16::eps, i))));
        }
        for (int i = 0; i < 15; ++i) {
            g.set(5 + b, 2 * i, gf16::trace(gf16::mul(u, gf16::pow(gf16::eps, 3 * i))));
            g.set(5 + b, 2 * i + 1, gf16::trace(gf16::mul(u, gf16::pow(gf16::eps, 3 * i + 2))));
        }
    }
    return AdditiveCode(15, std::move(g));
}

AdditiveCode rotate_coordinates(const AdditiveCode& c, int shift) {
    shift %= c.n;
    if (shift < 0) shift += c.n;
    BitMatrix g(c.dim2, 2 * c.n);
    for (int r = 0; r < c.dim2; ++r)
        for (int i = 0; i < c.n; ++i) {
            int j = (i + shift) % c.n;
            g.set(r, 2 * j, c.gen.get(r, 2 * i));
            g.set(r, 2 * j + 1, c.gen.get(r, 2 * i + 1));
        }
    return AdditiveCode(c.n, std::move(g));
}

CyclicReport verify_cyclic_properties(const AdditiveCode& c) {
    CyclicReport rep;

    AdditiveCode shifted = rotate_coordinates(c, 1);
    for (int r = 0; r < shifted.dim2; ++r)
        if (!c.contains(shifted.gen.row(r)))
            throw PropertyFailedError("codeword set not closed under coordinate rotation");
    rep.shift_closed = true;

    rep.strength = strength(to_line_system(c));
    if (rep.strength != 3) throw PropertyFailedError("strength is not 3");

    rep.min_distance = min_distance(c);
    if (rep.min_distance != 9) throw PropertyFailedError("minimum distance is not 9");

    return rep;
}

}  // namespace aq
