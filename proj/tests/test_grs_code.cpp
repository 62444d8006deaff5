#include <doctest.h>

#include "rsmsr/grs_code.hpp"

using namespace rsmsr;

namespace {

FieldElement inner(const Codeword& a, const Codeword& b) {
    FieldElement acc = a.symbols[0].tower()->zero();
    for (size_t i = 0; i < a.symbols.size(); ++i) acc += a.symbols[i] * b.symbols[i];
    return acc;
}

}  // namespace

TEST_CASE("encoding basics") {
    auto t = Tower::make(2, 2, {3, 5, 7});
    CodeSpec spec = CodeSpec::make(t, 3, 2);

    std::vector<FieldElement> zero_msg = {t->zero(), t->zero()};
    for (const auto& c : encode(spec, zero_msg).symbols) CHECK(c.is_zero());

    CodeSpec k1 = CodeSpec::make(t, 3, 1);
    SplitMix64 rng(2);
    FieldElement m = t->random_element(rng);
    Codeword cw = encode(k1, std::vector<FieldElement>{m});
    for (const auto& c : cw.symbols) CHECK(c == m);

    std::vector<FieldElement> bad = {t->one()};
    CHECK_THROWS_AS(encode(spec, bad), Error);
}

TEST_CASE("encoding is linear and interpolation inverts it") {
    auto t = Tower::make(2, 2, {3, 5, 7});
    CodeSpec spec = CodeSpec::make(t, 3, 2);
    SplitMix64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<FieldElement> m1 = {t->random_element(rng), t->random_element(rng)};
        std::vector<FieldElement> m2 = {t->random_element(rng), t->random_element(rng)};
        Codeword c1 = encode(spec, m1), c2 = encode(spec, m2);
        std::vector<FieldElement> sum = {m1[0] + m2[0], m1[1] + m2[1]};
        Codeword cs = encode(spec, sum);
        for (uint32_t i = 0; i < spec.n; ++i) CHECK(cs.symbols[i] == c1.symbols[i] + c2.symbols[i]);

        // any k coordinates reproduce the message
        std::vector<uint32_t> pos = {1, 3};
        std::vector<FieldElement> vals = {c1.symbols[0], c1.symbols[2]};
        auto rec = interpolate_message(spec, pos, vals);
        CHECK(rec[0] == m1[0]);
        CHECK(rec[1] == m1[1]);
    }
}

TEST_CASE("dual multipliers") {
    auto t = Tower::make(2, 2, {3, 5});
    CodeSpec spec = CodeSpec::make(t, 2, 1);
    auto u = dual_multipliers(spec);
    FieldElement diff = t->alpha(1) - t->alpha(2);
    CHECK(u[0] == diff.inv());
    CHECK(u[1] == (-diff).inv());

    // u spans the dual of the dimension-(n-1) code: sum u_i c_i = 0
    auto t3 = Tower::make(2, 2, {3, 5, 7});
    CodeSpec rs = CodeSpec::make(t3, 3, 2);
    auto u3 = dual_multipliers(rs);
    SplitMix64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<FieldElement> msg = {t3->random_element(rng), t3->random_element(rng)};
        Codeword cw = encode(rs, msg);
        FieldElement acc = t3->zero();
        for (uint32_t i = 0; i < 3; ++i) acc += u3[i] * cw.symbols[i];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("repair dual words vanish off the repair set and are orthogonal") {
    auto t = Tower::make(2, 2, {3, 5, 7, 11});
    CodeSpec spec = CodeSpec::make(t, 4, 2);
    SplitMix64 rng(17);

    // d = n-1: h is the empty product, w_j = u_j alpha_j^t
    auto u = dual_multipliers(spec);
    Codeword w = repair_dual_word(spec, 1, {2, 3, 4}, 1);
    for (uint32_t j = 2; j <= 4; ++j)
        CHECK(w.symbols[j - 1] == u[j - 1] * spec.points[j - 1]);

    // d = 2: zero exactly off helpers + failed
    Codeword w2 = repair_dual_word(spec, 1, {2, 3}, 0);
    CHECK(!w2.symbols[0].is_zero());
    CHECK(!w2.symbols[1].is_zero());
    CHECK(!w2.symbols[2].is_zero());
    CHECK(w2.symbols[3].is_zero());

    for (uint32_t trial = 0; trial < 10; ++trial) {
        std::vector<FieldElement> msg = {t->random_element(rng), t->random_element(rng)};
        Codeword cw = encode(spec, msg);
        CHECK(inner(w, cw).is_zero());
        CHECK(inner(w2, cw).is_zero());
    }
}

TEST_CASE("repair dual word rejects bad arguments") {
    auto t = Tower::make(2, 2, {3, 5, 7, 11});
    CodeSpec spec = CodeSpec::make(t, 4, 2);
    auto code_of = [&](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArguments;
    };
    CHECK(code_of([&] { repair_dual_word(spec, 1, {1, 2, 3}, 0); }) == Errc::BadHelperSet);
    CHECK(code_of([&] { repair_dual_word(spec, 1, {2}, 0); }) == Errc::BadHelperSet);
    CHECK(code_of([&] { repair_dual_word(spec, 1, {2, 3, 4}, 2); }) == Errc::BadT);
}

TEST_CASE("mds sanity") {
    auto t = Tower::make(2, 2, {3, 5, 7, 11});
    CodeSpec spec = CodeSpec::make(t, 4, 2);
    CHECK(mds_check(spec, 20, 99));

    // zero codeword interpolates to the zero message from any subset
    std::vector<FieldElement> zm = {t->zero(), t->zero()};
    Codeword zc = encode(spec, zm);
    auto rec = interpolate_message(spec, std::vector<uint32_t>{2, 4},
                                   std::vector<FieldElement>{zc.symbols[1], zc.symbols[3]});
    CHECK(rec[0].is_zero());
    CHECK(rec[1].is_zero());

    // tampering one symbol makes two k-subsets disagree
    SplitMix64 rng(23);
    std::vector<FieldElement> msg = {t->random_element(rng), t->random_element(rng)};
    Codeword cw = encode(spec, msg);
    cw.symbols[0] += t->one();
    auto with = interpolate_message(spec, std::vector<uint32_t>{1, 2},
                                    std::vector<FieldElement>{cw.symbols[0], cw.symbols[1]});
    auto without = interpolate_message(spec, std::vector<uint32_t>{3, 4},
                                       std::vector<FieldElement>{cw.symbols[2], cw.symbols[3]});
    bool differ = !(with[0] == without[0]) || !(with[1] == without[1]);
    CHECK(differ);
}
