#include "doctest.h"

#include "aq15/bounds.hpp"

using namespace aq;

TEST_CASE("griesmer sums") {
    CHECK(griesmer_min_length(1, 7, 2) == 7);
    CHECK(griesmer_min_length(1, 9, 5) == 9);
    // 18+9+5+3+2+1+1+1 = 40 > 39
    CHECK(griesmer_min_length(8, 18, 2) == 40);
    // 18+9+5+3+2 = 37 > 36
    CHECK(griesmer_min_length(5, 18, 2) == 37);
    CHECK(griesmer_min_length(4, 10, 2) == 10 + 5 + 3 + 2);
}

TEST_CASE("griesmer lower envelope") {
    for (int dim = 1; dim <= 8; ++dim)
        for (int d = 1; d <= 20; ++d) CHECK(griesmer_min_length(dim, d, 2) >= d + dim - 1);
}

TEST_CASE("nonexistence via concatenation") {
    auto v = quaternary_nonexistence(13, 8, 9);
    CHECK(v.verdict == Verdict::Nonexistent);
    CHECK(v.reason.starts_with("griesmer-concat"));
    CHECK(v.reason.find("40") != std::string::npos);

    auto w = quaternary_nonexistence(12, 5, 9);
    CHECK(w.verdict == Verdict::Nonexistent);
    CHECK(w.reason.starts_with("griesmer-concat"));
    CHECK(w.reason.find("37") != std::string::npos);
}

TEST_CASE("nonexistence via shortening into the table") {
    auto v = quaternary_nonexistence(15, 20, 5);
    CHECK(v.verdict == Verdict::Nonexistent);
    CHECK(v.reason.starts_with("shorten-chain"));
}

TEST_CASE("existence from the table") {
    auto v = quaternary_nonexistence(15, 9, 9);
    CHECK(v.verdict == Verdict::Exists);
    auto w = quaternary_nonexistence(15, 8, 10);
    CHECK(w.verdict == Verdict::Exists);
}

TEST_CASE("nonexistence is monotone in d") {
    for (auto [n, dim2, d] : {std::tuple{13, 8, 9}, {12, 5, 9}, {15, 20, 5}}) {
        CHECK(quaternary_nonexistence(n, dim2, d).verdict == Verdict::Nonexistent);
        CHECK(quaternary_nonexistence(n, dim2, d + 1).verdict == Verdict::Nonexistent);
    }
}

TEST_CASE("shipped table contents and consistency") {
    const OptTable& t = OptTable::shipped();
    CHECK(t.at(15, 8).d_lo == 10);   // linear [15,4,10] exists
    CHECK(t.at(15, 9).d_lo == 9);    // the [15,4.5,9] headline entry
    CHECK(t.at(14, 9).d_lo == 8);
    CHECK(t.at(15, 10).d_lo == 8);   // d = 8 for k = 5, not 9
    CHECK(t.at(14, 15).d_lo == 5);   // open range 5-6
    CHECK(t.at(14, 15).d_hi == 6);
    CHECK(t.at(15, 21).d_lo == t.at(15, 22).d_lo);  // merged rows
    CHECK(t.at(15, 23).d_lo == t.at(15, 24).d_lo);
    CHECK_THROWS_AS(t.at(16, 2), MissingEntryError);
    CHECK(table_consistency(t).empty());
}

TEST_CASE("seeded corruptions are detected") {
    auto corrupt = [](int n, int dim2, int d) {
        OptTable t = OptTable::shipped();
        TableEntry e = t.at(n, dim2);
        e.d_lo = e.d_hi = d;
        t.add(e);
        return table_consistency(t);
    };
    CHECK_FALSE(corrupt(14, 8, 11).empty());  // forces d(15,4) >= 11 > 10
    CHECK_FALSE(corrupt(15, 9, 12).empty());  // puncturing to n=14 breaks
    CHECK_FALSE(corrupt(11, 4, 5).empty());   // below what d(12,2)=9 punctures to
}

TEST_CASE("table parser accepts ranges and comments") {
    OptTable t = OptTable::parse("# header\n4 7 5 # linear\n9 14 7-8\n");
    CHECK(t.at(7, 4).d_lo == 5);
    CHECK(t.at(14, 9).d_lo == 7);
    CHECK(t.at(14, 9).d_hi == 8);
    CHECK_FALSE(t.lookup(5, 4).has_value());
}
