#include "rsmsr/fq_matrix.hpp"

#include <algorithm>
#include <bit>

namespace rsmsr {

namespace {

inline uint64_t parity64(uint64_t x) { return static_cast<uint64_t>(std::popcount(x)) & 1u; }

}  // namespace

FqMatrix::FqMatrix(uint32_t rows, uint32_t cols, uint32_t q)
    : rows_(rows), cols_(cols), q_(q), packed_(q == 2) {
    require(q >= 2 && is_small_prime(q), Errc::NotPrime, "matrix modulus must be a small prime");
    if (packed_) {
        words_per_row_ = (cols_ + 63) / 64;
        bits_.assign(static_cast<size_t>(rows_) * words_per_row_, 0);
    } else {
        vals_.assign(static_cast<size_t>(rows_) * cols_, 0);
    }
}

void FqMatrix::set(uint32_t r, uint32_t c, uint32_t value) {
    value %= q_;
    if (packed_) {
        uint64_t& w = bits_[static_cast<size_t>(r) * words_per_row_ + c / 64];
        uint64_t mask = 1ULL << (c % 64);
        w = value ? (w | mask) : (w & ~mask);
    } else {
        vals_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(value);
    }
}

uint32_t FqMatrix::get(uint32_t r, uint32_t c) const {
    if (packed_) {
        return (bits_[static_cast<size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    return vals_[static_cast<size_t>(r) * cols_ + c];
}

std::vector<uint8_t> FqMatrix::apply(std::span<const uint8_t> x) const {
    require(x.size() == cols_, Errc::LengthMismatch, "apply: vector length != cols");
    std::vector<uint8_t> y(rows_, 0);
    if (packed_) {
        std::vector<uint64_t> xw(words_per_row_, 0);
        for (uint32_t c = 0; c < cols_; ++c)
            if (x[c]) xw[c / 64] |= 1ULL << (c % 64);
        for (uint32_t r = 0; r < rows_; ++r) {
            const uint64_t* row = &bits_[static_cast<size_t>(r) * words_per_row_];
            uint64_t acc = 0;
            for (uint32_t w = 0; w < words_per_row_; ++w) acc ^= row[w] & xw[w];
            y[r] = static_cast<uint8_t>(parity64(acc));
        }
    } else {
        for (uint32_t r = 0; r < rows_; ++r) {
            const uint8_t* row = &vals_[static_cast<size_t>(r) * cols_];
            uint64_t acc = 0;
            for (uint32_t c = 0; c < cols_; ++c) acc += static_cast<uint64_t>(row[c]) * x[c];
            y[r] = static_cast<uint8_t>(acc % q_);
        }
    }
    return y;
}

// Shared elimination engine working on a scratch copy of the matrix plus an
// optional augmented column.
class Eliminator {
public:
    Eliminator(const FqMatrix& m, const uint8_t* rhs)
        : q_(m.q()), rows_(m.rows()), cols_(m.cols()), packed_(m.packed_) {
        if (packed_) {
            // one extra column slot for the rhs
            wpr_ = (cols_ + 1 + 63) / 64;
            bits_.assign(static_cast<size_t>(rows_) * wpr_, 0);
            for (uint32_t r = 0; r < rows_; ++r) {
                const uint64_t* src = &m.bits_[static_cast<size_t>(r) * m.words_per_row_];
                uint64_t* dst = &bits_[static_cast<size_t>(r) * wpr_];
                std::copy(src, src + m.words_per_row_, dst);
                if (rhs && rhs[r]) dst[cols_ / 64] |= 1ULL << (cols_ % 64);
            }
        } else {
            stride_ = cols_ + 1;
            vals_.assign(static_cast<size_t>(rows_) * stride_, 0);
            for (uint32_t r = 0; r < rows_; ++r) {
                const uint8_t* src = &m.vals_[static_cast<size_t>(r) * cols_];
                uint8_t* dst = &vals_[static_cast<size_t>(r) * stride_];
                std::copy(src, src + cols_, dst);
                if (rhs) dst[cols_] = rhs[r];
            }
        }
    }

    // Forward elimination; records pivot column per pivot row.
    uint32_t forward() {
        uint32_t piv = 0;
        for (uint32_t c = 0; c < cols_ && piv < rows_; ++c) {
            uint32_t pr = piv;
            while (pr < rows_ && at(pr, c) == 0) ++pr;
            if (pr == rows_) continue;
            swap_rows(pr, piv);
            normalize(piv, c);
            for (uint32_t r = piv + 1; r < rows_; ++r) {
                uint32_t f = at(r, c);
                if (f) axpy(r, piv, q_ - f);
            }
            pivot_cols_.push_back(c);
            ++piv;
        }
        return piv;
    }

    std::optional<std::vector<uint8_t>> back_substitute() {
        uint32_t piv = static_cast<uint32_t>(pivot_cols_.size());
        for (uint32_t r = piv; r < rows_; ++r)
            if (at(r, cols_) != 0) return std::nullopt;
        std::vector<uint8_t> x(cols_, 0);
        back_substitute_into(x, true);
        return x;
    }

    // Solves for the pivot variables given fixed free variables in x; when
    // use_rhs is false the system is treated as homogeneous.
    void back_substitute_into(std::vector<uint8_t>& x, bool use_rhs) {
        uint32_t piv = static_cast<uint32_t>(pivot_cols_.size());
        for (uint32_t i = piv; i-- > 0;) {
            uint32_t c = pivot_cols_[i];
            uint64_t acc = use_rhs ? at(i, cols_) : 0;
            for (uint32_t cc = c + 1; cc < cols_; ++cc) {
                uint32_t coef = at(i, cc);
                if (coef) acc += static_cast<uint64_t>(q_) * q_ - static_cast<uint64_t>(coef) * x[cc];
            }
            x[c] = static_cast<uint8_t>(acc % q_);
        }
    }

    std::vector<std::vector<uint8_t>> kernel_basis() {
        std::vector<char> is_pivot(cols_, 0);
        for (uint32_t c : pivot_cols_) is_pivot[c] = 1;
        std::vector<std::vector<uint8_t>> basis;
        for (uint32_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<uint8_t> x(cols_, 0);
            x[f] = 1;
            back_substitute_into(x, false);
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    uint32_t at(uint32_t r, uint32_t c) const {
        if (packed_) return (bits_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
        return vals_[static_cast<size_t>(r) * stride_ + c];
    }

    void swap_rows(uint32_t a, uint32_t b) {
        if (a == b) return;
        if (packed_) {
            std::swap_ranges(bits_.begin() + static_cast<size_t>(a) * wpr_,
                             bits_.begin() + static_cast<size_t>(a + 1) * wpr_,
                             bits_.begin() + static_cast<size_t>(b) * wpr_);
        } else {
            std::swap_ranges(vals_.begin() + static_cast<size_t>(a) * stride_,
                             vals_.begin() + static_cast<size_t>(a + 1) * stride_,
                             vals_.begin() + static_cast<size_t>(b) * stride_);
        }
    }

    void normalize(uint32_t r, uint32_t c) {
        if (packed_) return;
        uint32_t v = at(r, c);
        if (v == 1) return;
        uint32_t inv = mod_inverse(v, q_);
        uint8_t* row = &vals_[static_cast<size_t>(r) * stride_];
        for (uint32_t cc = c; cc <= cols_; ++cc)
            row[cc] = static_cast<uint8_t>(row[cc] * inv % q_);
    }

    // row_r += f * row_p
    void axpy(uint32_t r, uint32_t p, uint32_t f) {
        if (packed_) {
            uint64_t* dst = &bits_[static_cast<size_t>(r) * wpr_];
            const uint64_t* src = &bits_[static_cast<size_t>(p) * wpr_];
            for (uint32_t w = 0; w < wpr_; ++w) dst[w] ^= src[w];
        } else {
            uint8_t* dst = &vals_[static_cast<size_t>(r) * stride_];
            const uint8_t* src = &vals_[static_cast<size_t>(p) * stride_];
            for (uint32_t c = 0; c <= cols_; ++c)
                dst[c] = static_cast<uint8_t>((dst[c] + static_cast<uint32_t>(f) * src[c]) % q_);
        }
    }

    uint32_t q_, rows_, cols_;
    bool packed_;
    uint32_t wpr_ = 0, stride_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> vals_;
    std::vector<uint32_t> pivot_cols_;
};

uint32_t FqMatrix::rank() const {
    Eliminator e(*this, nullptr);
    return e.forward();
}

std::optional<std::vector<uint8_t>> FqMatrix::solve(std::span<const uint8_t> b) const {
    require(b.size() == rows_, Errc::LengthMismatch, "solve: rhs length != rows");
    Eliminator e(*this, b.data());
    e.forward();
    return e.back_substitute();
}

std::vector<std::vector<uint8_t>> FqMatrix::nullspace() const {
    Eliminator e(*this, nullptr);
    e.forward();
    return e.kernel_basis();
}

uint32_t mod_inverse(uint32_t a, uint32_t q) {
    require(a % q != 0, Errc::DivisionByZero, "mod_inverse of 0");
    int64_t t = 0, nt = 1, r = q, nr = a % q;
    while (nr != 0) {
        int64_t quo = r / nr;
        std::swap(t -= quo * nt, nt);
        std::swap(r -= quo * nr, nr);
    }
    if (t < 0) t += q;
    return static_cast<uint32_t>(t);
}

bool is_small_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace rsmsr
