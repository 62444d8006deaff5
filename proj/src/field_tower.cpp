#include "rsmsr/field_tower.hpp"

#include <algorithm>

#include "poly_util.hpp"

namespace rsmsr {

namespace {

using detail::Poly;
using detail::find_irreducible;
using detail::poly_mulmod;
using detail::poly_powmod;

// Per-variable expansion rows for x -> x^(q^j): rows[v][e] lists the
// (offset, coefficient) pairs of (alpha_v^(q^j))^e in the canonical basis.
using FrobRows = std::vector<std::vector<std::vector<std::pair<uint32_t, uint8_t>>>>;

struct FrobExpander {
    const FrobRows& rows;
    const uint32_t* digits;
    size_t nv;
    uint32_t q;
    // visit(offset, coeff) for every term of the tensor product
    template <typename F>
    void run(uint32_t base_coef, F&& visit) const {
        walk(0, 0, base_coef % q, visit);
    }
    template <typename F>
    void walk(size_t v, uint64_t off, uint32_t coef, F&& visit) const {
        if (v == nv) {
            visit(off, coef);
            return;
        }
        for (const auto& [d, cv] : rows[v][digits[v]]) walk(v + 1, off + d, coef * cv % q, visit);
    }
};

}  // namespace

std::string SubfieldSpec::name() const {
    switch (kind) {
        case Kind::Base: return "F_q";
        case Kind::FFull: return "F";
        case Kind::FMinus: return "F_" + std::to_string(index);
        case Kind::EFull: return "E";
    }
    return "?";
}

TowerPtr Tower::make(uint32_t q, uint32_t s, const std::vector<uint32_t>& primes) {
    require(is_small_prime(q), Errc::NotPrime, "base field order q = " + std::to_string(q));
    require(q <= 251, Errc::InvalidArguments, "base field order must fit a byte");
    require(s >= 2, Errc::InvalidArguments, "s must be at least 2");
    for (uint32_t p : primes) {
        require(is_small_prime(p), Errc::NotPrime, "extension degree " + std::to_string(p));
        require(p > s, Errc::PrimeTooSmall, std::to_string(p) + " must exceed s = " + std::to_string(s));
    }
    {
        std::vector<uint32_t> sorted(primes);
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Errc::DuplicatePrime,
                "extension degrees must be distinct");
    }

    auto t = std::shared_ptr<Tower>(new Tower());
    t->q_ = q;
    t->s_ = s;
    t->primes_ = primes;

    uint64_t ell = s;
    for (uint32_t p : primes) ell *= p;
    require(static_cast<uint64_t>(q - 1) * (q - 1) * ell < (1ull << 31), Errc::InvalidArguments,
            "subpacketization too large for this implementation");
    t->ell_ = ell;

    std::vector<uint32_t> sizes(primes.begin(), primes.end());
    sizes.push_back(s);
    uint64_t stride = 1, pad_stride = 1;
    for (uint32_t size : sizes) {
        Var v;
        v.size = size;
        v.minpoly = find_irreducible(q, size);
        v.stride = stride;
        v.pad_stride = pad_stride;
        // x^t mod minpoly for t = size .. 2*size-2
        std::vector<uint8_t> row(size);
        for (uint32_t i = 0; i < size; ++i) row[i] = static_cast<uint8_t>((q - v.minpoly[i]) % q);
        v.red.push_back(row);
        for (uint32_t tdeg = size + 1; tdeg <= 2 * size - 2; ++tdeg) {
            std::vector<uint8_t> next(size, 0);
            const auto& prev = v.red.back();
            uint32_t carry = prev[size - 1];
            for (uint32_t i = 0; i + 1 < size; ++i) next[i + 1] = prev[i];
            if (carry)
                for (uint32_t i = 0; i < size; ++i)
                    next[i] = static_cast<uint8_t>((next[i] + carry * v.red[0][i]) % q);
            v.red.push_back(std::move(next));
        }
        stride *= size;
        pad_stride *= 2 * size - 1;
        t->vars_.push_back(std::move(v));
    }
    t->pad_size_ = pad_stride;
    require(t->pad_size_ <= (1ull << 26), Errc::InvalidArguments, "padded product grid too large");

    t->pad_off_.resize(ell);
    std::vector<uint32_t> digits(t->vars_.size());
    for (uint64_t idx = 0; idx < ell; ++idx) {
        t->decode_digits(idx, digits.data());
        uint64_t off = 0;
        for (size_t v = 0; v < t->vars_.size(); ++v) off += digits[v] * t->vars_[v].pad_stride;
        t->pad_off_[idx] = static_cast<uint32_t>(off);
    }
    return t;
}

const std::vector<uint8_t>& Tower::minpoly_alpha(uint32_t i) const {
    require(i >= 1 && i <= num_primes(), Errc::IndexOutOfRange, "alpha index");
    return vars_[i - 1].minpoly;
}

void Tower::decode_digits(uint64_t index, uint32_t* digits) const {
    for (size_t v = 0; v < vars_.size(); ++v) {
        digits[v] = static_cast<uint32_t>(index % vars_[v].size);
        index /= vars_[v].size;
    }
}

FieldElement Tower::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint8_t>(ell_, 0));
}

FieldElement Tower::one() const { return scalar(1); }

FieldElement Tower::scalar(uint32_t value) const {
    std::vector<uint8_t> c(ell_, 0);
    c[0] = static_cast<uint8_t>(value % q_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Tower::monomial(uint64_t index) const {
    require(index < ell_, Errc::IndexOutOfRange, "monomial index");
    std::vector<uint8_t> c(ell_, 0);
    c[index] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Tower::alpha(uint32_t i) const {
    require(i >= 1 && i <= num_primes(), Errc::IndexOutOfRange, "alpha index");
    return monomial(vars_[i - 1].stride);
}

FieldElement Tower::beta() const { return monomial(vars_.back().stride); }

FieldElement Tower::from_coeffs(std::vector<uint8_t> coeffs) const {
    require(coeffs.size() == ell_, Errc::LengthMismatch, "coefficient array must have length ell");
    for (uint8_t c : coeffs)
        require(c < q_, Errc::InvalidArguments, "coefficient not reduced mod q");
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement Tower::random_element(SplitMix64& rng) const {
    std::vector<uint8_t> c(ell_);
    for (auto& v : c) v = static_cast<uint8_t>(rng.below(q_));
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Tower::random_subfield_element(SplitMix64& rng, SubfieldSpec sub) const {
    std::vector<uint8_t> c(ell_, 0);
    for (uint64_t idx : subfield_monomial_indices(sub)) c[idx] = static_cast<uint8_t>(rng.below(q_));
    return FieldElement(shared_from_this(), std::move(c));
}

uint64_t Tower::subfield_degree(SubfieldSpec sub) const {
    switch (sub.kind) {
        case SubfieldSpec::Kind::Base: return 1;
        case SubfieldSpec::Kind::FFull: return ell_ / s_;
        case SubfieldSpec::Kind::FMinus:
            require(sub.index >= 1 && sub.index <= num_primes(), Errc::IndexOutOfRange, "subfield index");
            return ell_ / (static_cast<uint64_t>(s_) * primes_[sub.index - 1]);
        case SubfieldSpec::Kind::EFull: return ell_;
    }
    fail(Errc::InvalidArguments, "bad subfield kind");
}

uint64_t Tower::subfield_codegree(SubfieldSpec sub) const { return ell_ / subfield_degree(sub); }

std::vector<uint64_t> Tower::subfield_monomial_indices(SubfieldSpec sub) const {
    std::vector<uint64_t> out;
    switch (sub.kind) {
        case SubfieldSpec::Kind::Base: out.push_back(0); break;
        case SubfieldSpec::Kind::EFull:
            out.resize(ell_);
            for (uint64_t i = 0; i < ell_; ++i) out[i] = i;
            break;
        case SubfieldSpec::Kind::FFull: {
            uint64_t lim = ell_ / s_;  // beta exponent zero <=> index below beta stride
            out.resize(lim);
            for (uint64_t i = 0; i < lim; ++i) out[i] = i;
            break;
        }
        case SubfieldSpec::Kind::FMinus: {
            require(sub.index >= 1 && sub.index <= num_primes(), Errc::IndexOutOfRange, "subfield index");
            const Var& v = vars_[sub.index - 1];
            uint64_t lim = ell_ / s_;
            for (uint64_t i = 0; i < lim; ++i)
                if ((i / v.stride) % v.size == 0) out.push_back(i);
            break;
        }
    }
    return out;
}

std::vector<FieldElement> Tower::subfield_monomials(SubfieldSpec sub) const {
    std::vector<FieldElement> out;
    for (uint64_t idx : subfield_monomial_indices(sub)) out.push_back(monomial(idx));
    return out;
}

std::vector<uint8_t> Tower::mul_coeffs(std::span<const uint8_t> a, std::span<const uint8_t> b) const {
    std::vector<std::pair<uint32_t, uint32_t>> sa, sb;
    for (uint64_t i = 0; i < ell_; ++i)
        if (a[i]) sa.emplace_back(pad_off_[i], a[i]);
    for (uint64_t i = 0; i < ell_; ++i)
        if (b[i]) sb.emplace_back(pad_off_[i], b[i]);
    std::vector<uint8_t> out(ell_, 0);
    if (sa.empty() || sb.empty()) return out;

    std::vector<uint32_t> acc(pad_size_, 0);
    for (const auto& [oa, va] : sa)
        for (const auto& [ob, vb] : sb) acc[oa + ob] += va * vb;

    // fold exponents that overflowed each variable's degree
    for (size_t v = vars_.size(); v-- > 0;) {
        const Var& V = vars_[v];
        uint32_t P = V.size;
        uint64_t pre = V.pad_stride;
        uint64_t block = pre * (2 * P - 1);
        for (uint32_t tdeg = 2 * P - 2; tdeg >= P; --tdeg) {
            const auto& row = V.red[tdeg - P];
            for (uint64_t base = 0; base < pad_size_; base += block) {
                uint64_t plane = base + static_cast<uint64_t>(tdeg) * pre;
                for (uint64_t off = 0; off < pre; ++off) {
                    uint32_t c = acc[plane + off] % q_;
                    acc[plane + off] = 0;
                    if (c)
                        for (uint32_t u = 0; u < P; ++u)
                            if (row[u]) acc[base + u * pre + off] += c * row[u];
                }
            }
        }
    }
    for (uint64_t idx = 0; idx < ell_; ++idx) out[idx] = static_cast<uint8_t>(acc[pad_off_[idx]] % q_);
    return out;
}

std::vector<uint8_t> Tower::mul_by_gen(std::span<const uint8_t> a, uint32_t v) const {
    const Var& V = vars_[v];
    std::vector<uint32_t> acc(ell_, 0);
    for (uint64_t idx = 0; idx < ell_; ++idx) {
        uint32_t c = a[idx];
        if (!c) continue;
        uint32_t digit = static_cast<uint32_t>((idx / V.stride) % V.size);
        if (digit + 1 < V.size) {
            acc[idx + V.stride] += c;
        } else {
            uint64_t base = idx - static_cast<uint64_t>(digit) * V.stride;
            const auto& row = V.red[0];
            for (uint32_t u = 0; u < V.size; ++u)
                if (row[u]) acc[base + u * V.stride] += c * row[u];
        }
    }
    std::vector<uint8_t> out(ell_);
    for (uint64_t idx = 0; idx < ell_; ++idx) out[idx] = static_cast<uint8_t>(acc[idx] % q_);
    return out;
}

namespace {

// rows[v][e]: canonical-basis expansion of (gamma_v)^e where gamma_v is the
// image of generator v under x -> x^(q^j), as (offset, coefficient) pairs.
FrobRows make_frob_rows(uint32_t q, uint64_t j, const std::vector<Poly>& minpolys,
                        const std::vector<uint32_t>& sizes, const std::vector<uint64_t>& strides) {
    FrobRows rows(sizes.size());
    for (size_t v = 0; v < sizes.size(); ++v) {
        uint32_t P = sizes[v];
        // Frobenius has order P on the subfield generated by this variable
        uint32_t steps = static_cast<uint32_t>(j % P);
        Poly gamma = {0, 1};
        for (uint32_t t = 0; t < steps; ++t) gamma = poly_powmod(gamma, q, minpolys[v], q);
        rows[v].resize(P);
        Poly acc = {1};
        for (uint32_t e = 0; e < P; ++e) {
            if (e) acc = poly_mulmod(acc, gamma, minpolys[v], q);
            for (size_t u = 0; u < acc.size(); ++u)
                if (acc[u]) rows[v][e].emplace_back(static_cast<uint32_t>(u * strides[v]), acc[u]);
        }
    }
    return rows;
}

}  // namespace

std::vector<uint8_t> Tower::frobenius_coeffs(std::span<const uint8_t> a, uint64_t j) const {
    j %= ell_;
    if (j == 0) return std::vector<uint8_t>(a.begin(), a.end());
    std::vector<Poly> minpolys;
    std::vector<uint32_t> sizes;
    std::vector<uint64_t> strides;
    for (const Var& v : vars_) {
        minpolys.push_back(v.minpoly);
        sizes.push_back(v.size);
        strides.push_back(v.stride);
    }
    FrobRows rows = make_frob_rows(q_, j, minpolys, sizes, strides);
    std::vector<uint32_t> acc(ell_, 0);
    std::vector<uint32_t> digits(vars_.size());
    for (uint64_t idx = 0; idx < ell_; ++idx) {
        if (!a[idx]) continue;
        decode_digits(idx, digits.data());
        FrobExpander ex{rows, digits.data(), vars_.size(), q_};
        ex.run(a[idx], [&](uint64_t off, uint32_t coef) { acc[off] += coef % q_; });
    }
    std::vector<uint8_t> out(ell_);
    for (uint64_t idx = 0; idx < ell_; ++idx) out[idx] = static_cast<uint8_t>(acc[idx] % q_);
    return out;
}

const FqMatrix& Tower::frob_matrix(uint64_t j) const {
    j %= ell_;
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = frob_cache_.find(j);
    if (it != frob_cache_.end()) return it->second;

    FqMatrix m(static_cast<uint32_t>(ell_), static_cast<uint32_t>(ell_), q_);
    std::vector<Poly> minpolys;
    std::vector<uint32_t> sizes;
    std::vector<uint64_t> strides;
    for (const Var& v : vars_) {
        minpolys.push_back(v.minpoly);
        sizes.push_back(v.size);
        strides.push_back(v.stride);
    }
    FrobRows rows = make_frob_rows(q_, j, minpolys, sizes, strides);
    std::vector<uint32_t> digits(vars_.size());
    for (uint64_t col = 0; col < ell_; ++col) {
        decode_digits(col, digits.data());
        FrobExpander ex{rows, digits.data(), vars_.size(), q_};
        ex.run(1, [&](uint64_t off, uint32_t coef) {
            m.set(static_cast<uint32_t>(off), static_cast<uint32_t>(col), coef % q_);
        });
    }
    auto [ins, ok] = frob_cache_.emplace(j, std::move(m));
    (void)ok;
    return ins->second;
}

std::vector<uint8_t> Tower::inv_coeffs(std::span<const uint8_t> a) const {
    bool nonzero = false;
    std::vector<char> active(vars_.size(), 0);
    std::vector<uint32_t> digits(vars_.size());
    for (uint64_t idx = 0; idx < ell_; ++idx) {
        if (!a[idx]) continue;
        nonzero = true;
        decode_digits(idx, digits.data());
        for (size_t v = 0; v < vars_.size(); ++v)
            if (digits[v]) active[v] = 1;
    }
    require(nonzero, Errc::DivisionByZero, "inverse of zero");

    // Invert inside the subalgebra generated by the variables that actually
    // occur; for elements of F or F_i this shrinks the linear solve a lot.
    std::vector<uint32_t> lvars;
    for (uint32_t v = 0; v < vars_.size(); ++v)
        if (active[v]) lvars.push_back(v);
    uint64_t L = 1;
    std::vector<uint64_t> lstride(lvars.size());
    for (size_t t = 0; t < lvars.size(); ++t) {
        lstride[t] = L;
        L *= vars_[lvars[t]].size;
    }
    std::vector<uint64_t> lat(L);  // local position -> canonical index
    for (uint64_t pos = 0; pos < L; ++pos) {
        uint64_t canon = 0, r = pos;
        for (size_t t = 0; t < lvars.size(); ++t) {
            canon += (r % vars_[lvars[t]].size) * vars_[lvars[t]].stride;
            r /= vars_[lvars[t]].size;
        }
        lat[pos] = canon;
    }

    auto mul_gen_local = [&](const std::vector<uint8_t>& vec, size_t t) {
        const Var& V = vars_[lvars[t]];
        std::vector<uint32_t> acc(L, 0);
        for (uint64_t pos = 0; pos < L; ++pos) {
            uint32_t c = vec[pos];
            if (!c) continue;
            uint32_t digit = static_cast<uint32_t>((pos / lstride[t]) % V.size);
            if (digit + 1 < V.size) {
                acc[pos + lstride[t]] += c;
            } else {
                uint64_t base = pos - static_cast<uint64_t>(digit) * lstride[t];
                for (uint32_t u = 0; u < V.size; ++u)
                    if (V.red[0][u]) acc[base + u * lstride[t]] += c * V.red[0][u];
            }
        }
        std::vector<uint8_t> out(L);
        for (uint64_t pos = 0; pos < L; ++pos) out[pos] = static_cast<uint8_t>(acc[pos] % q_);
        return out;
    };

    // columns of multiplication-by-a, built generator step by generator step
    std::vector<std::vector<uint8_t>> cols(L);
    cols[0].resize(L);
    for (uint64_t pos = 0; pos < L; ++pos) cols[0][pos] = a[lat[pos]];
    for (uint64_t pos = 1; pos < L; ++pos) {
        size_t t = 0;
        while ((pos / lstride[t]) % vars_[lvars[t]].size == 0) ++t;
        cols[pos] = mul_gen_local(cols[pos - lstride[t]], t);
    }
    FqMatrix m(static_cast<uint32_t>(L), static_cast<uint32_t>(L), q_);
    for (uint64_t pos = 0; pos < L; ++pos)
        for (uint64_t r = 0; r < L; ++r)
            if (cols[pos][r]) m.set(static_cast<uint32_t>(r), static_cast<uint32_t>(pos), cols[pos][r]);

    std::vector<uint8_t> rhs(L, 0);
    rhs[0] = 1;
    auto sol = m.solve(rhs);
    require(sol.has_value(), Errc::InvalidArguments, "internal: inversion solve failed");
    std::vector<uint8_t> out(ell_, 0);
    for (uint64_t pos = 0; pos < L; ++pos) out[lat[pos]] = (*sol)[pos];
    return out;
}

// ---------------------------------------------------------------------------
// FieldElement

const Tower& FieldElement::rep() const {
    require(tower_ != nullptr, Errc::ConfigMismatch, "operation on null element");
    return *tower_;
}

void FieldElement::check_same(const FieldElement& rhs) const {
    rep();
    rhs.rep();
    require(tower_.get() == rhs.tower_.get(), Errc::ConfigMismatch, "operands belong to different towers");
}

bool FieldElement::is_zero() const {
    rep();
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint8_t c) { return c == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(rhs);
    const uint32_t q = rep().q_;
    std::vector<uint8_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint8_t>((coeffs_[i] + rhs.coeffs_[i]) % q);
    return FieldElement(tower_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(rhs);
    const uint32_t q = rep().q_;
    std::vector<uint8_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<uint8_t>((coeffs_[i] + q - rhs.coeffs_[i]) % q);
    return FieldElement(tower_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const uint32_t q = rep().q_;
    std::vector<uint8_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint8_t>((q - coeffs_[i]) % q);
    return FieldElement(tower_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(rhs);
    return FieldElement(tower_, rep().mul_coeffs(coeffs_, rhs.coeffs_));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same(rhs);
    return coeffs_ == rhs.coeffs_;
}

FieldElement FieldElement::inv() const { return FieldElement(tower_, rep().inv_coeffs(coeffs_)); }

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = rep().one();
    FieldElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(uint64_t j) const {
    return FieldElement(tower_, rep().frobenius_coeffs(coeffs_, j));
}

FieldElement FieldElement::trace_to(SubfieldSpec sub) const {
    const Tower& t = rep();
    if (sub.kind == SubfieldSpec::Kind::EFull) return *this;
    uint64_t r = t.subfield_degree(sub);
    uint64_t d = t.ell_ / r;
    const FqMatrix& m = t.frob_matrix(r);
    std::vector<uint8_t> y(coeffs_);
    std::vector<uint32_t> acc(coeffs_.begin(), coeffs_.end());
    for (uint64_t step = 1; step < d; ++step) {
        y = m.apply(y);
        for (size_t i = 0; i < y.size(); ++i) acc[i] += y[i];
    }
    std::vector<uint8_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint8_t>(acc[i] % t.q_);
    return FieldElement(tower_, std::move(out));
}

bool FieldElement::is_in_subfield(SubfieldSpec sub) const {
    const Tower& t = rep();
    if (sub.kind == SubfieldSpec::Kind::EFull) return true;
    uint64_t r = t.subfield_degree(sub);
    return t.frob_matrix(r).apply(coeffs_) == coeffs_;
}

std::string FieldElement::to_string() const {
    const Tower& t = rep();
    require(t.q_ <= 36, Errc::InvalidArguments, "digit string needs q <= 36");
    static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out(coeffs_.size(), '0');
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = digits[coeffs_[i]];
    return out;
}

// ---------------------------------------------------------------------------
// linear algebra over subfields

uint32_t rank_over_fq(std::span<const FieldElement> elems) {
    require(!elems.empty(), Errc::InvalidArguments, "rank of empty list");
    const TowerPtr& t = elems[0].tower();
    require(t != nullptr, Errc::ConfigMismatch, "null element");
    FqMatrix m(static_cast<uint32_t>(elems.size()), static_cast<uint32_t>(t->ell()), t->q());
    for (uint32_t r = 0; r < elems.size(); ++r) {
        require(elems[r].tower().get() == t.get(), Errc::ConfigMismatch, "mixed towers");
        auto c = elems[r].coeffs();
        for (uint32_t j = 0; j < c.size(); ++j)
            if (c[j]) m.set(r, j, c[j]);
    }
    return m.rank();
}

uint32_t rank_over_subfield(std::span<const FieldElement> elems, SubfieldSpec sub) {
    require(!elems.empty(), Errc::InvalidArguments, "rank of empty list");
    const TowerPtr& t = elems[0].tower();
    auto wits = t->subfield_monomials(sub);
    std::vector<FieldElement> prods;
    prods.reserve(elems.size() * wits.size());
    for (const FieldElement& e : elems)
        for (const FieldElement& w : wits) prods.push_back(e * w);
    uint32_t r = rank_over_fq(prods);
    uint32_t d = static_cast<uint32_t>(t->subfield_degree(sub));
    require(r % d == 0, Errc::InvalidArguments, "internal: subfield rank not divisible by degree");
    return r / d;
}

std::vector<FieldElement> dual_basis(std::span<const FieldElement> basis, SubfieldSpec sub) {
    require(!basis.empty(), Errc::NotABasis, "empty basis");
    const TowerPtr& t = basis[0].tower();
    require(t != nullptr, Errc::ConfigMismatch, "null element");
    uint64_t d = t->subfield_codegree(sub);
    require(basis.size() == d, Errc::NotABasis,
            "need [E:sub] = " + std::to_string(d) + " elements, got " + std::to_string(basis.size()));

    // Gram matrix of the trace form; its inverse rotates the basis into its
    // trace-dual: mu_b = sum_a (G^-1)[a][b] basis[a].
    std::vector<std::vector<FieldElement>> aug(d, std::vector<FieldElement>(2 * d));
    for (uint64_t a = 0; a < d; ++a) {
        for (uint64_t b = a; b < d; ++b) {
            FieldElement g = (basis[a] * basis[b]).trace_to(sub);
            aug[a][b] = g;
            aug[b][a] = g;
        }
        for (uint64_t b = 0; b < d; ++b) aug[a][d + b] = (a == b) ? t->one() : t->zero();
    }
    for (uint64_t c = 0; c < d; ++c) {
        uint64_t pr = c;
        while (pr < d && aug[pr][c].is_zero()) ++pr;
        require(pr < d, Errc::NotABasis, "elements dependent over subfield");
        std::swap(aug[pr], aug[c]);
        FieldElement pivinv = aug[c][c].inv();
        for (uint64_t cc = c; cc < 2 * d; ++cc) aug[c][cc] = aug[c][cc] * pivinv;
        for (uint64_t r = 0; r < d; ++r) {
            if (r == c || aug[r][c].is_zero()) continue;
            FieldElement f = aug[r][c];
            for (uint64_t cc = c; cc < 2 * d; ++cc) aug[r][cc] = aug[r][cc] - f * aug[c][cc];
        }
    }
    std::vector<FieldElement> mu(d);
    for (uint64_t b = 0; b < d; ++b) {
        FieldElement acc = t->zero();
        for (uint64_t a = 0; a < d; ++a) acc = acc + aug[a][d + b] * basis[a];
        mu[b] = acc;
    }
    return mu;
}

}  // namespace rsmsr
