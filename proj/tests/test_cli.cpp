#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "rsmsr/cli_app.hpp"

using namespace rsmsr::cli;

namespace {

std::string run_transform(uint32_t p, uint32_t s) {
    std::ostringstream os;
    TransformOpts o{p, s};
    REQUIRE(cmd_transform(o, os) == 0);
    return os.str();
}

}  // namespace

TEST_CASE("transform output reproduces the reference (7,5) grids") {
    const std::string expected = R"GOLD(
B (7x5)
1    ab    a^2b^2  a^3b^3  a^4b^4
a    a^2b  a^3b^2  a^4b^3  a^5b^4
a^2  a^3b  a^4b^2  a^5b^3  a^6b^4
a^3  a^4b  a^5b^2  a^6b^3  a^7b^4
a^4  a^5b  a^6b^2  a^7b^3  a^8b^4
a^5  a^6b  a^7b^2  a^8b^3  a^9b^4
a^6  a^7b  a^8b^2  a^9b^3  a^10b^4

R = reshape(B) (5x7)
1    ab    a^2b^2  a^3b^3  a^4b^4  a^5     a^6b
a    a^2b  a^3b^2  a^4b^3  a^5b^4  a^6     a^7b
a^2  a^3b  a^4b^2  a^5b^3  a^6b^4  a^7b^2  a^8b^3
a^3  a^4b  a^5b^2  a^6b^3  a^7b^4  a^8b^2  a^9b^3
a^4  a^5b  a^6b^2  a^7b^3  a^8b^4  a^9b^4  a^10b^4

Rbar = interfere(R) (5x7)
1    ab    a^2b^2  a^3b^3  a^4b^4  a^5(1+b^2+b^4)  a^6(b+b^3+b^4)
a    a^2b  a^3b^2  a^4b^3  a^5b^4  a^6(1+b^2+b^4)  a^7(b+b^3+b^4)
a^2  a^3b  a^4b^2  a^5b^3  a^6b^4  a^7(1+b^2+b^4)  a^8(b+b^3+b^4)
a^3  a^4b  a^5b^2  a^6b^3  a^7b^4  a^8(1+b^2+b^4)  a^9(b+b^3+b^4)
a^4  a^5b  a^6b^2  a^7b^3  a^8b^4  a^9(1+b^2+b^4)  a^10(b+b^3+b^4)
)GOLD";
    CHECK(run_transform(7, 5) == expected.substr(1));  // drop the leading newline
}

TEST_CASE("partition command emits schema-tagged JSON and an optional grid") {
    std::ostringstream os;
    PartitionOpts o{7, 5, true};
    REQUIRE(cmd_partition(o, os) == 0);
    std::string out = os.str();
    CHECK(out.find("\"schema\": 1") != std::string::npos);
    CHECK(out.find("\"gcd\": 1") != std::string::npos);
    // 7 grid lines after the JSON, first all 'A', last row mixing B/C/E
    CHECK(out.find("AAAAA") != std::string::npos);
    CHECK(out.find("BBCCD") != std::string::npos);
    CHECK(out.find("BBCCE") != std::string::npos);
}

TEST_CASE("verify-subspace command reports dimensions") {
    std::ostringstream os;
    VerifySubspaceOpts o{2, 7, 5};
    REQUIRE(cmd_verify_subspace(o, os) == 0);
    std::string out = os.str();
    CHECK(out.find("\"dimS\": 7") != std::string::npos);
    CHECK(out.find("\"dimK\": 35") != std::string::npos);
    CHECK(out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("compare-subpack command emits exact products") {
    std::ostringstream os;
    CompareSubpackOpts o{3, 4};
    REQUIRE(cmd_compare_subpack(o, os) == 0);
    std::string out = os.str();
    CHECK(out.find("\"ellNew\": \"15015\"") != std::string::npos);
    CHECK(out.find("\"ellCongruent\": \"160797\"") != std::string::npos);
}

TEST_CASE("repair demo is deterministic for a fixed seed") {
    RepairDemoOpts o;
    o.code = CodeOpts{2, 2, {3, 5, 7}, 3, 1, 42};
    o.fail = 2;
    o.helpers = {1, 3};
    std::ostringstream a, b;
    REQUIRE(cmd_repair_demo(o, a) == 0);
    REQUIRE(cmd_repair_demo(o, b) == 0);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"ok\": true") != std::string::npos);

    o.code.seed = 43;
    std::ostringstream c;
    REQUIRE(cmd_repair_demo(o, c) == 0);
    CHECK(a.str() != c.str());
}

TEST_CASE("bench emits one row per node and helper set") {
    BenchOpts o;
    o.code = CodeOpts{2, 2, {3, 5, 7}, 3, 1, 7};
    o.max_helper_sets = 2;
    std::ostringstream os;
    REQUIRE(cmd_bench(o, os) == 0);
    std::string out = os.str();
    size_t lines = std::count(out.begin(), out.end(), '\n');
    CHECK(lines == 1 + 3 * 1);  // header + 3 nodes x 1 available 2-subset
    CHECK(out.rfind("node,p_i,helpers,", 0) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    const char* bad_flag[] = {"rsmsr", "partition", "--p", "7", "--s", "5", "--bogus"};
    CHECK(run_cli(7, bad_flag) == 2);
    const char* missing[] = {"rsmsr", "transform", "--p", "7"};
    CHECK(run_cli(4, missing) == 2);
    const char* inconsistent[] = {"rsmsr", "build-code", "--q", "2", "--s", "2",
                                  "--primes", "3,5,7", "--n", "4", "--k", "2"};
    CHECK(run_cli(12, inconsistent) == 2);
}

TEST_CASE("verification failures exit with code 1 and a JSON diagnostic") {
    RepairDemoOpts o;
    o.code = CodeOpts{2, 2, {3, 5, 7}, 3, 1, 1};
    o.fail = 1;
    o.helpers = {1, 2};  // failed node in the helper set
    std::ostringstream os;
    CHECK_THROWS(cmd_repair_demo(o, os));
}

TEST_CASE("build-code emits tower config and sample codeword") {
    CodeOpts o{2, 2, {3, 5}, 2, 1, 5};
    std::ostringstream os;
    REQUIRE(cmd_build_code(o, os) == 0);
    std::string out = os.str();
    CHECK(out.find("\"ell\": 30") != std::string::npos);
    CHECK(out.find("\"codeword\"") != std::string::npos);
    CHECK(out.find("\"g\"") != std::string::npos);
}

TEST_CASE("assertion failures surface as exit code 1 through run_cli") {
    const char* argv[] = {"rsmsr", "repair-demo", "--q", "2", "--s", "2", "--primes", "3,5,7",
                          "--n", "3", "--k", "1", "--fail", "1", "--helpers", "1,2"};
    CHECK(run_cli(16, argv) == 1);
}
