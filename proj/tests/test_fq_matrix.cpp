#include <doctest.h>

#include "rsmsr/fq_matrix.hpp"

using namespace rsmsr;

TEST_CASE("rank and solve over F_2") {
    FqMatrix m(3, 3, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 1, 1);
    m.set(1, 2, 1);
    m.set(2, 0, 1);
    m.set(2, 2, 1);  // row0 + row1 = row2
    CHECK(m.rank() == 2);

    std::vector<uint8_t> b = {1, 0, 1};
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    std::vector<uint8_t> bad = {1, 0, 0};
    CHECK(!m.solve(bad).has_value());
}

TEST_CASE("rank and solve over F_3") {
    FqMatrix m(2, 2, 3);
    m.set(0, 0, 2);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(m.rank() == 2);
    std::vector<uint8_t> b = {1, 2};
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
}

TEST_CASE("nullspace vectors are annihilated") {
    FqMatrix m(2, 4, 2);
    m.set(0, 0, 1);
    m.set(0, 2, 1);
    m.set(1, 1, 1);
    m.set(1, 3, 1);
    auto ns = m.nullspace();
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        auto img = m.apply(v);
        for (uint8_t c : img) CHECK(c == 0);
    }
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(7, 11) == 8);
}
