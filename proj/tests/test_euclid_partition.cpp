#include <doctest.h>

#include <map>

#include "rsmsr/euclid_partition.hpp"

using namespace rsmsr;

TEST_CASE("division chains") {
    EuclidChain c = euclid_chain(7, 5);
    CHECK(c.quotients == std::vector<uint32_t>{1, 2, 2});
    CHECK(c.remainders == std::vector<uint32_t>{2, 1});
    CHECK(c.m() == 2);
    CHECK(c.gcd() == 1);

    c = euclid_chain(7, 3);
    CHECK(c.quotients == std::vector<uint32_t>{2, 3});
    CHECK(c.remainders == std::vector<uint32_t>{1});
    CHECK(c.m() == 1);

    c = euclid_chain(6, 3);
    CHECK(c.quotients == std::vector<uint32_t>{2});
    CHECK(c.remainders.empty());
    CHECK(c.m() == 0);
    CHECK(c.gcd() == 3);

    CHECK_THROWS_AS(euclid_chain(3, 3), Error);
    CHECK_THROWS_AS(euclid_chain(3, 0), Error);
}

TEST_CASE("partition layout for reference shapes") {
    SquarePartition p75 = square_partition(7, 5);
    std::vector<Square> expect75 = {{0, 0, 5}, {5, 0, 2}, {5, 2, 2}, {5, 4, 1}, {6, 4, 1}};
    CHECK(p75.squares == expect75);

    SquarePartition p22 = square_partition(2, 2);
    CHECK(p22.squares == std::vector<Square>{{0, 0, 2}});

    SquarePartition p53 = square_partition(5, 3);
    std::vector<Square> expect53 = {{0, 0, 3}, {3, 0, 2}, {3, 2, 1}, {4, 2, 1}};
    CHECK(p53.squares == expect53);
}

TEST_CASE("local column coordinates") {
    EuclidChain c75 = euclid_chain(7, 5);
    CHECK(local_coords(0, c75) == std::vector<uint32_t>{0, 0});
    CHECK(local_coords(1, c75) == std::vector<uint32_t>{1, 0});

    EuclidChain c73 = euclid_chain(7, 3);
    CHECK(local_coords(0, c73) == std::vector<uint32_t>{0});

    CHECK_THROWS_AS(local_coords(2, c75), Error);          // b_1 = 2
    CHECK_THROWS_AS(local_coords(0, euclid_chain(6, 3)), Error);  // m = 0
}

TEST_CASE("partitions are disjoint covers with the chain's side multiset") {
    for (uint32_t p = 2; p <= 60; ++p) {
        for (uint32_t s = 1; s < p; ++s) {
            SquarePartition part = square_partition(p, s);
            std::vector<std::vector<char>> hit(p, std::vector<char>(s, 0));
            uint64_t area = 0;
            std::map<uint32_t, uint32_t> sides;
            for (const Square& sq : part.squares) {
                ++sides[sq.side];
                area += static_cast<uint64_t>(sq.side) * sq.side;
                for (uint32_t r = 0; r < sq.side; ++r)
                    for (uint32_t c = 0; c < sq.side; ++c) {
                        REQUIRE(sq.row + r < p);
                        REQUIRE(sq.col + c < s);
                        REQUIRE(!hit[sq.row + r][sq.col + c]);
                        hit[sq.row + r][sq.col + c] = 1;
                    }
            }
            CHECK(area == static_cast<uint64_t>(p) * s);

            EuclidChain chain = euclid_chain(p, s);
            std::map<uint32_t, uint32_t> expected;
            for (uint32_t t = 0; t <= chain.m(); ++t) expected[chain.b(t == 0 ? 0 : t)] += chain.a(t);
            // b_0 = s is the side of the a_0 leading squares
            CHECK(sides == expected);
        }
    }
}

TEST_CASE("chain recomputed from the partition multiset matches") {
    for (uint32_t p = 2; p <= 40; ++p) {
        for (uint32_t s = 1; s < p; ++s) {
            EuclidChain chain = euclid_chain(p, s);
            SquarePartition part = square_partition(p, s);
            // walk the placement order: side changes mark chain steps
            std::vector<std::pair<uint32_t, uint32_t>> runs;  // (side, count)
            for (const Square& sq : part.squares) {
                if (runs.empty() || runs.back().first != sq.side)
                    runs.push_back({sq.side, 1});
                else
                    ++runs.back().second;
            }
            REQUIRE(runs.size() == chain.m() + 1);
            for (uint32_t t = 0; t <= chain.m(); ++t) {
                CHECK(runs[t].first == chain.b(t == 0 ? 0 : t));
                CHECK(runs[t].second == chain.a(t));
            }
        }
    }
}

TEST_CASE("residual partition") {
    EuclidChain c75 = euclid_chain(7, 5);
    SquarePartition resid = residual_partition(c75);
    CHECK(resid.h == 5);
    CHECK(resid.w == 2);
    std::vector<Square> expect = {{0, 0, 2}, {2, 0, 2}, {4, 0, 1}, {4, 1, 1}};
    CHECK(resid.squares == expect);

    CHECK(residual_partition(euclid_chain(6, 3)).squares.empty());
}
