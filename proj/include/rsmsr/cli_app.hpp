#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rsmsr::cli {

struct PartitionOpts {
    uint32_t p = 0, s = 0;
    bool ascii = false;
};

struct TransformOpts {
    uint32_t p = 0, s = 0;
};

struct VerifySubspaceOpts {
    uint32_t q = 2, p = 0, s = 0;
};

struct CodeOpts {
    uint32_t q = 2, s = 2;
    std::vector<uint32_t> primes;
    uint32_t n = 0, k = 0;
    uint64_t seed = 1;
};

struct RepairDemoOpts {
    CodeOpts code;
    uint32_t fail = 0;
    std::vector<uint32_t> helpers;
};

struct BenchOpts {
    CodeOpts code;
    uint32_t max_helper_sets = 3;
};

struct CompareSubpackOpts {
    uint32_t s = 0, n = 0;
};

int cmd_partition(const PartitionOpts&, std::ostream& out);
int cmd_transform(const TransformOpts&, std::ostream& out);
int cmd_verify_subspace(const VerifySubspaceOpts&, std::ostream& out);
int cmd_build_code(const CodeOpts&, std::ostream& out);
int cmd_repair_demo(const RepairDemoOpts&, std::ostream& out);
int cmd_bench(const BenchOpts&, std::ostream& out);
int cmd_compare_subpack(const CompareSubpackOpts&, std::ostream& out);

/// Parses argv, dispatches, writes to --output or stdout. Exit codes:
/// 0 success, 1 failed assertion/verification (JSON diagnostic), 2 usage.
int run_cli(int argc, const char* const* argv);

}  // namespace rsmsr::cli
