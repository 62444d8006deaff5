#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsmsr/field_tower.hpp"
#include "rsmsr/rng.hpp"

namespace rsmsr {

/// RS_E(n, k, Omega) with Omega = (alpha_1, ..., alpha_n), the tower
/// generators. Codewords are evaluations of polynomials of degree < k.
struct CodeSpec {
    TowerPtr tower;
    uint32_t n = 0, k = 0;
    std::vector<FieldElement> points;  // alpha_1..alpha_n

    static CodeSpec make(TowerPtr tower, uint32_t n, uint32_t k);
    uint32_t s() const { return tower->s(); }
    uint32_t d() const { return s() + k - 1; }  // repair degree
};

struct Codeword {
    std::vector<FieldElement> symbols;
};

/// c_i = f(alpha_i) where f's coefficients are the message (degree < k).
Codeword encode(const CodeSpec& spec, std::span<const FieldElement> message);

/// u_i = prod_{j != i} (alpha_i - alpha_j)^(-1): the column multipliers of
/// the dual code GRS(n, n-k, Omega, u).
std::vector<FieldElement> dual_multipliers(const CodeSpec& spec);

/// The dual codeword (u_j alpha_j^t h(alpha_j))_j with
/// h(x) = prod_{j not in helpers+{failed}} (x - alpha_j). Vanishes off
/// helpers+{failed}; orthogonal to every codeword for 0 <= t <= |helpers|-k.
Codeword repair_dual_word(const CodeSpec& spec, uint32_t failed,
                          const std::vector<uint32_t>& helpers, uint32_t t);

/// Message recovered from the k values at `positions` (1-based, distinct) by
/// Lagrange interpolation.
std::vector<FieldElement> interpolate_message(const CodeSpec& spec,
                                              std::span<const uint32_t> positions,
                                              std::span<const FieldElement> values);

/// Randomized MDS sanity check: every k-subset of a random codeword must
/// reproduce the encoded message.
bool mds_check(const CodeSpec& spec, uint32_t trials, uint64_t seed);

}  // namespace rsmsr
