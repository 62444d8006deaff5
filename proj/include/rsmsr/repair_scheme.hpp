#pragma once

#include <cstdint>
#include <vector>

#include "rsmsr/bigint.hpp"
#include "rsmsr/grs_code.hpp"

namespace rsmsr {

/// Everything precomputed for repairing one node from one helper set:
/// the repair subspace basis e_1..e_{p_i}, the h-polynomial values, the dual
/// multipliers, the query basis zeta_{t,m} = e_m u_i alpha_i^t h(alpha_i)
/// (a basis of E over F_i) and its trace-dual mu_{t,m}.
struct RepairPlan {
    CodeSpec spec;
    uint32_t failed = 0;               // 1-based node index
    std::vector<uint32_t> helpers;     // sorted, size d = s+k-1
    uint32_t node_prime = 0;           // p_i of the failed node
    SubfieldSpec subfield;             // F_i, the repair subfield
    std::vector<FieldElement> subspace;     // e_1..e_{p_i}
    std::vector<FieldElement> dual_mult;    // u_1..u_n
    std::vector<FieldElement> h_values;     // h(alpha_j), indexed 0..n-1
    std::vector<FieldElement> query_basis;  // zeta, index t*p_i + (m-1)
    std::vector<FieldElement> dual_query;   // mu, same indexing

    uint32_t d() const { return static_cast<uint32_t>(helpers.size()); }
};

/// Builds the plan and verifies the rank guarantees (full F_q-rank ell of the
/// query basis times an F_i-basis, and trace-duality spot checks).
RepairPlan plan_repair(const CodeSpec& spec, uint32_t failed, std::vector<uint32_t> helpers);

/// What helper j sends: the p_i subfield symbols trace_to(c_j u_j e_m, F_i).
std::vector<FieldElement> helper_response(const FieldElement& symbol, uint32_t helper,
                                          const RepairPlan& plan);

/// Exact reconstruction of the erased symbol from the d helper responses
/// (ordered like plan.helpers).
FieldElement reconstruct(const std::vector<std::vector<FieldElement>>& responses,
                         const RepairPlan& plan);

struct BandwidthReport {
    uint64_t fq_symbols = 0;        // downloaded F_q symbols: d * p_i * [F_i:F_q]
    uint64_t cutset_bound = 0;      // d * ell / (d - k + 1)
    uint64_t naive_fq_symbols = 0;  // k * ell
    uint32_t fi_symbols_per_helper = 0;  // p_i
    bool optimal = false;
};

BandwidthReport measure_bandwidth(const RepairPlan& plan);

/// One full repair: responses gathered from the codeword, symbol rebuilt,
/// download ledger filled in.
struct RepairTranscript {
    uint32_t failed = 0;
    std::vector<uint32_t> helpers;
    std::vector<std::vector<FieldElement>> responses;  // per helper, p_i subfield symbols
    uint64_t downloaded_fq_symbols = 0;
    FieldElement reconstructed;
};

RepairTranscript run_repair(const Codeword& cw, const RepairPlan& plan);

/// Subpacketization of this construction (primes > s) against the variant
/// requiring p = 1 mod s, for the same (s, n).
struct SubpackComparison {
    std::vector<uint32_t> primes_new, primes_cong;
    BigUint ell_new, ell_cong;
    double ratio = 0.0;  // ell_cong / ell_new
};

SubpackComparison compare_subpacketization(uint32_t s, uint32_t n);

}  // namespace rsmsr
