#include "doctest.h"

#include <array>
#include <set>

#include "aq15/cyclic15.hpp"

using namespace aq;

TEST_CASE("gf16 arithmetic") {
    using namespace gf16;
    // eps^4 = eps + 1
    CHECK(pow(eps, 4) == (eps ^ 1));
    // eps generates the multiplicative group
    std::set<uint8_t> powers;
    for (int i = 0; i < 15; ++i) powers.insert(pow(eps, i));
    CHECK(powers.size() == 15);
    CHECK(pow(eps, 15) == 1);
    // field axioms, exhaustively for 16 elements
    for (int a = 0; a < 16; ++a) {
        CHECK(mul(a, 1) == a);
        CHECK(mul(a, 0) == 0);
        for (int b = 0; b < 16; ++b) {
            CHECK(mul(a, b) == mul(b, a));
            for (int c = 0; c < 16; ++c) {
                CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
                CHECK(mul(a, b ^ c) == (mul(a, b) ^ mul(a, c)));
            }
        }
    }
}

TEST_CASE("trace values and linearity") {
    using namespace gf16;
    CHECK(trace(0) == 0);
    CHECK(trace(1) == 0);
    CHECK(trace(eps) == 0);
    // oracle: x + x^2 + x^4 + x^8 via repeated squaring
    for (int x = 0; x < 16; ++x) {
        uint8_t x2 = mul(x, x);
        uint8_t x4 = mul(x2, x2);
        uint8_t x8 = mul(x4, x4);
        uint8_t t = uint8_t(x) ^ x2 ^ x4 ^ x8;
        CHECK((t == 0 || t == 1));
        CHECK(trace(x) == t);
    }
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) CHECK(trace(x ^ y) == (trace(x) ^ trace(y)));
    // trace is onto: not identically zero
    int ones = 0;
    for (int x = 0; x < 16; ++x) ones += trace(x);
    CHECK(ones == 8);
}

TEST_CASE("cyclic code construction") {
    AdditiveCode c = build_cyclic_code();
    CHECK(c.n == 15);
    CHECK(c.dim2 == 9);
    CHECK(rank(c.gen) == 9);
    CHECK(c.num_codewords() == 512);
    // C0 generator: the all-(1,1) word
    uint64_t all11 = 0;
    for (int i = 0; i < 15; ++i) all11 |= uint64_t(3) << (2 * i);
    CHECK(c.contains(all11));
    // C1 word for u = 1 has pair (T(eps), T(1)) = (0,0) at coordinate 0
    CHECK(gf16::trace(gf16::eps) == 0);
    CHECK(gf16::trace(1) == 0);
}

TEST_CASE("cyclic code properties") {
    AdditiveCode c = build_cyclic_code();
    CyclicReport r = verify_cyclic_properties(c);
    CHECK(r.shift_closed);
    CHECK(r.strength == 3);
    CHECK(r.min_distance == 9);
}

TEST_CASE("rotation closure for every shift") {
    AdditiveCode c = build_cyclic_code();
    for (int s = 1; s < 15; ++s) {
        AdditiveCode r = rotate_coordinates(c, s);
        for (int i = 0; i < r.dim2; ++i) CHECK(c.contains(r.gen.row(i)));
    }
    AdditiveCode full = rotate_coordinates(c, 15);
    CHECK(full.gen == c.gen);
}

TEST_CASE("shift-invariant weight distribution") {
    AdditiveCode c = build_cyclic_code();
    std::array<int, 16> dist{};
    for (uint64_t m = 1; m < c.num_codewords(); ++m)
        ++dist[quaternary_weight(c.codeword(m), 15)];
    for (int w = 1; w < 9; ++w) CHECK(dist[w] == 0);
    CHECK(dist[9] + dist[10] + dist[11] + dist[12] + dist[13] + dist[14] + dist[15] == 511);
    // the weight-15 word (11)^15 is in the code
    CHECK(dist[15] >= 1);
}

TEST_CASE("property verification rejects a broken code") {
    AdditiveCode c = build_cyclic_code();
    BitMatrix g = c.gen;
    g.set(0, 0, !g.get(0, 0));
    if (rank(g) == 9) {
        AdditiveCode broken(15, g);
        CHECK_THROWS_AS(verify_cyclic_properties(broken), PropertyFailedError);
    }
}
