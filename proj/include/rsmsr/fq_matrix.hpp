#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsmsr/errors.hpp"

namespace rsmsr {

/// Dense matrix over the prime field F_q with exact Gaussian elimination.
/// Rows are bit-packed for q = 2 and byte-per-entry otherwise; all public
/// operations are storage-agnostic.
class FqMatrix {
public:
    FqMatrix(uint32_t rows, uint32_t cols, uint32_t q);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    uint32_t q() const { return q_; }

    void set(uint32_t r, uint32_t c, uint32_t value);
    uint32_t get(uint32_t r, uint32_t c) const;

    /// Matrix-vector product M*x over F_q. x.size() must equal cols().
    std::vector<uint8_t> apply(std::span<const uint8_t> x) const;

    /// Rank via elimination on a scratch copy.
    uint32_t rank() const;

    /// One solution of M*x = b (free variables set to 0), or nullopt if the
    /// system is inconsistent.
    std::optional<std::vector<uint8_t>> solve(std::span<const uint8_t> b) const;

    /// Basis of the right kernel {x : M*x = 0}, one vector per free column.
    std::vector<std::vector<uint8_t>> nullspace() const;

private:
    uint32_t rows_, cols_, q_;
    bool packed_;
    uint32_t words_per_row_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> vals_;

    friend class Eliminator;
};

/// a^(-1) mod q for prime q, 0 < a < q.
uint32_t mod_inverse(uint32_t a, uint32_t q);

bool is_small_prime(uint64_t n);

}  // namespace rsmsr
