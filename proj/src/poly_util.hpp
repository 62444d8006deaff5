#pragma once

// Internal univariate polynomial helpers over F_q (dense, low-degree).
// Shared by the tower construction and the single-extension span checker.

#include <cstdint>
#include <utility>
#include <vector>

#include "rsmsr/errors.hpp"
#include "rsmsr/fq_matrix.hpp"

namespace rsmsr::detail {

using Poly = std::vector<uint8_t>;  // c[i] is the coefficient of x^i

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// a mod f for monic f
inline Poly poly_mod(Poly a, const Poly& f, uint32_t q) {
    int df = poly_deg(f);
    for (int d = poly_deg(a); d >= df; --d) {
        uint32_t c = a[d];
        if (c) {
            for (int i = 0; i < df; ++i)
                a[d - df + i] = static_cast<uint8_t>((a[d - df + i] + c * (q - f[i])) % q);
            a[d] = 0;
        }
    }
    poly_trim(a);
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t q) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint8_t>((c[i + j] + static_cast<uint32_t>(a[i]) * b[j]) % q);
    }
    return poly_mod(std::move(c), f, q);
}

inline Poly poly_add(Poly a, const Poly& b, uint32_t q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint8_t>((a[i] + b[i]) % q);
    poly_trim(a);
    return a;
}

inline Poly poly_sub(Poly a, const Poly& b, uint32_t q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint8_t>((a[i] + q - b[i]) % q);
    poly_trim(a);
    return a;
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t q) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, q);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, q);
        base = poly_mulmod(base, base, f, q);
        e >>= 1;
    }
    return r;
}

inline Poly poly_rem(Poly a, Poly b, uint32_t q) {
    poly_trim(a);
    poly_trim(b);
    uint32_t binv = mod_inverse(b.back(), q);
    int db = poly_deg(b);
    for (int d = poly_deg(a); d >= db; --d) {
        uint32_t c = static_cast<uint32_t>(a[d]) * binv % q;
        if (c) {
            for (int i = 0; i <= db; ++i)
                a[d - db + i] = static_cast<uint8_t>((a[d - db + i] + c * (q - b[i])) % q);
        }
    }
    poly_trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t q) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin-style test: f (monic, deg m >= 2) is irreducible over F_q iff
// gcd(f, x^(q^t) - x) is constant for every t <= m/2.
inline bool is_irreducible(const Poly& f, uint32_t q) {
    int m = poly_deg(f);
    Poly x = {0, 1};
    Poly g = x;
    for (int t = 1; t <= m / 2; ++t) {
        g = poly_powmod(std::move(g), q, f, q);
        Poly d = poly_gcd(f, poly_sub(g, x, q), q);
        if (poly_deg(d) > 0) return false;
    }
    return true;
}

// Lowest monic irreducible of the given degree, ordering the coefficient
// vector (c_{deg-1},...,c_0) as a base-q integer.
inline Poly find_irreducible(uint32_t q, uint32_t deg) {
    require(deg >= 2, Errc::InvalidArguments, "irreducible scan needs degree >= 2");
    std::vector<uint8_t> c(deg, 0);
    for (;;) {
        if (c[0] != 0) {  // f(0) = 0 would make x a factor
            Poly f(c.begin(), c.end());
            f.push_back(1);
            if (is_irreducible(f, q)) return f;
        }
        uint32_t i = 0;
        while (i < deg && ++c[i] == q) c[i++] = 0;
        if (i == deg) fail(Errc::NoIrreducibleFound, "scan exhausted (cannot happen for valid degree)");
    }
}

}  // namespace rsmsr::detail
