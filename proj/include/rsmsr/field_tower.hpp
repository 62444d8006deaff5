#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "rsmsr/errors.hpp"
#include "rsmsr/fq_matrix.hpp"
#include "rsmsr/rng.hpp"

namespace rsmsr {

class Tower;
class FieldElement;
using TowerPtr = std::shared_ptr<const Tower>;

/// Designates a subfield of E = F_q(alpha_1,...,alpha_n)(beta):
///   Base    - the prime field F_q
///   FFull   - F = F_q(alpha_1,...,alpha_n)
///   FMinus  - F_i = F_q({alpha_j : j != i}), index is the 1-based i
///   EFull   - E itself
struct SubfieldSpec {
    enum class Kind { Base, FFull, FMinus, EFull };
    Kind kind = Kind::Base;
    uint32_t index = 0;  // used by FMinus only

    static SubfieldSpec base() { return {Kind::Base, 0}; }
    static SubfieldSpec f_full() { return {Kind::FFull, 0}; }
    static SubfieldSpec f_minus(uint32_t i) { return {Kind::FMinus, i}; }
    static SubfieldSpec e_full() { return {Kind::EFull, 0}; }

    friend bool operator==(const SubfieldSpec&, const SubfieldSpec&) = default;
    std::string name() const;
};

/// The field tower F_q < F < E realized as a tensor of univariate extensions:
/// elements are F_q-linear combinations of the ell = s * prod(p_i) monomials
///   alpha_1^{e_1} ... alpha_n^{e_n} beta^e,  0 <= e_i < p_i, 0 <= e < s.
///
/// Every minimal polynomial is taken over F_q itself; this is sound because
/// the extension degrees {p_1, ..., p_n, s} are pairwise coprime (the p_i are
/// distinct primes exceeding s, so each f_i stays irreducible over the
/// compositum of the others, and g stays irreducible over F). The polynomials
/// are chosen deterministically: the lowest monic irreducible of the required
/// degree when the coefficient vector (c_{d-1},...,c_0) is read as a base-q
/// integer.
///
/// Coefficient order ("mixed-radix", used by serialization and rank checks):
/// position e_1 + p_1*(e_2 + p_2*(... + p_n * e)): e_1 varies fastest, the
/// beta exponent e slowest.
///
/// Immutable after construction; the internal Frobenius-matrix cache is
/// guarded by a mutex, so a Tower may be shared freely across threads.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    /// Builds the tower for base field order q (prime), repair parameter
    /// s >= 2 and the given distinct primes, each > s.
    static TowerPtr make(uint32_t q, uint32_t s, const std::vector<uint32_t>& primes);

    uint32_t q() const { return q_; }
    uint32_t s() const { return s_; }
    uint32_t num_primes() const { return static_cast<uint32_t>(primes_.size()); }
    const std::vector<uint32_t>& primes() const { return primes_; }
    uint64_t ell() const { return ell_; }

    /// Coefficients (constant first, monic leading coefficient included) of
    /// the minimal polynomial of alpha_i (1-based) resp. beta.
    const std::vector<uint8_t>& minpoly_alpha(uint32_t i) const;
    const std::vector<uint8_t>& minpoly_beta() const { return vars_.back().minpoly; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement scalar(uint32_t value) const;  // value mod q times 1
    FieldElement alpha(uint32_t i) const;       // 1-based generator
    FieldElement beta() const;
    FieldElement monomial(uint64_t index) const;  // basis monomial by mixed-radix index
    FieldElement from_coeffs(std::vector<uint8_t> coeffs) const;

    FieldElement random_element(SplitMix64& rng) const;
    FieldElement random_subfield_element(SplitMix64& rng, SubfieldSpec sub) const;

    uint64_t subfield_degree(SubfieldSpec sub) const;    // [sub : F_q]
    uint64_t subfield_codegree(SubfieldSpec sub) const;  // [E : sub]

    /// Mixed-radix indices of the monomials spanning `sub` over F_q.
    std::vector<uint64_t> subfield_monomial_indices(SubfieldSpec sub) const;
    std::vector<FieldElement> subfield_monomials(SubfieldSpec sub) const;

private:
    Tower() = default;

    struct Var {
        uint32_t size;                          // extension degree of this generator
        std::vector<uint8_t> minpoly;           // monic, length size+1
        uint64_t stride;                        // canonical mixed-radix stride
        uint64_t pad_stride;                    // stride in the padded product grid
        std::vector<std::vector<uint8_t>> red;  // red[t-size] = x^t mod minpoly, length size
    };

    uint32_t q_ = 0, s_ = 0;
    std::vector<uint32_t> primes_;
    uint64_t ell_ = 0;
    std::vector<Var> vars_;  // alpha_1..alpha_n then beta
    uint64_t pad_size_ = 0;
    std::vector<uint32_t> pad_off_;  // canonical index -> padded index

    mutable std::mutex cache_mu_;
    mutable std::map<uint64_t, FqMatrix> frob_cache_;  // j -> matrix of x -> x^(q^j)

    // coefficient-level arithmetic
    std::vector<uint8_t> mul_coeffs(std::span<const uint8_t> a, std::span<const uint8_t> b) const;
    std::vector<uint8_t> mul_by_gen(std::span<const uint8_t> a, uint32_t v) const;
    std::vector<uint8_t> frobenius_coeffs(std::span<const uint8_t> a, uint64_t j) const;
    std::vector<uint8_t> inv_coeffs(std::span<const uint8_t> a) const;
    const FqMatrix& frob_matrix(uint64_t j) const;
    void decode_digits(uint64_t index, uint32_t* digits) const;

    friend class FieldElement;
    friend std::vector<FieldElement> dual_basis(std::span<const FieldElement>, SubfieldSpec);
};

/// Element of E in the tower's monomial basis. Value type: immutable in
/// practice, cheap to copy for desk-scale ell. All operations are exact.
class FieldElement {
public:
    FieldElement() = default;  // null element; usable only as assignment target

    const TowerPtr& tower() const { return tower_; }
    std::span<const uint8_t> coeffs() const { return coeffs_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;

    /// x -> x^(q^j), the j-th power of the base-field Frobenius.
    FieldElement frobenius(uint64_t j) const;

    /// Trace from E down to `sub`: sum of x^(Q^t) over the Galois orbit,
    /// Q = q^[sub:F_q]. The result lies in `sub` and the map is sub-linear.
    FieldElement trace_to(SubfieldSpec sub) const;

    bool is_in_subfield(SubfieldSpec sub) const;

    /// The ell coefficients as base-q digits in mixed-radix order.
    std::string to_string() const;

private:
    FieldElement(TowerPtr t, std::vector<uint8_t> c) : tower_(std::move(t)), coeffs_(std::move(c)) {}

    const Tower& rep() const;
    void check_same(const FieldElement& rhs) const;

    TowerPtr tower_;
    std::vector<uint8_t> coeffs_;

    friend class Tower;
};

/// Rank over F_q of the coefficient matrix of `elems`.
uint32_t rank_over_fq(std::span<const FieldElement> elems);

/// Dimension over `sub` of the sub-span of `elems`: computed as the F_q-rank
/// of {e * w : e in elems, w monomial basis of sub} divided by [sub:F_q].
uint32_t rank_over_subfield(std::span<const FieldElement> elems, SubfieldSpec sub);

/// The trace-dual basis {mu_b}: trace_to(basis[a] * mu[b], sub) = delta_ab.
/// Requires exactly [E:sub] elements, independent over sub.
std::vector<FieldElement> dual_basis(std::span<const FieldElement> basis, SubfieldSpec sub);

}  // namespace rsmsr
