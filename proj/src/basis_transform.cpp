#include "rsmsr/basis_transform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "poly_util.hpp"

namespace rsmsr {

SymbolicGrid build_grid(uint32_t p, uint32_t s) {
    require(s >= 1 && p > s, Errc::InvalidArguments, "need p > s >= 1");
    SymbolicGrid g;
    g.rows = p;
    g.cols = s;
    g.cells.resize(static_cast<size_t>(p) * s);
    for (uint32_t i = 0; i < p; ++i)
        for (uint32_t j = 0; j < s; ++j) g.at(i, j) = SymbolicEntry{i + j, {j}};
    return g;
}

SymbolicGrid reshape(const SymbolicGrid& b, const SquarePartition& part) {
    require(part.h == b.rows && part.w == b.cols, Errc::ShapeMismatch,
            "partition does not match grid dimensions");
    SymbolicGrid r;
    r.rows = b.cols;
    r.cols = b.rows;
    r.cells.resize(b.cells.size());
    for (const Square& sq : part.squares) {
        // square at (x, y) in the source lands at (y, x), transposed blockwise
        for (uint32_t u = 0; u < sq.side; ++u)
            for (uint32_t v = 0; v < sq.side; ++v)
                r.at(sq.col + u, sq.row + v) = b.at(sq.row + u, sq.col + v);
    }
    return r;
}

SymbolicGrid interfere(const SymbolicGrid& r) {
    SymbolicGrid out = r;
    for (uint32_t j = 0; j < r.cols; ++j) {
        std::vector<uint32_t> col_exps;
        for (uint32_t i = 0; i < r.rows; ++i) {
            const SymbolicEntry& e = r.at(i, j);
            require(e.alpha_exp == i + j, Errc::NonConsecutiveAlphaExponents,
                    "column " + std::to_string(j) + " lacks consecutive alpha exponents");
            require(e.beta_exps.size() == 1, Errc::InvalidArguments,
                    "interference input must have singleton beta exponents");
            col_exps.push_back(e.beta_exps[0]);
        }
        std::sort(col_exps.begin(), col_exps.end());
        col_exps.erase(std::unique(col_exps.begin(), col_exps.end()), col_exps.end());
        for (uint32_t i = 0; i < r.rows; ++i) out.at(i, j).beta_exps = col_exps;
    }
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> column_intersections(uint32_t j,
                                                                const SquarePartition& part) {
    require(j < part.w, Errc::IndexOutOfRange, "column outside partition");
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (const Square& sq : part.squares)
        if (sq.col <= j && j < sq.col + sq.side) out.emplace_back(sq.row, j - sq.col);
    return out;
}

SymbolicEntry closed_form_entry(uint32_t j, const EuclidChain& chain) {
    require(chain.m() >= 1 && j < chain.b(1), Errc::IndexOutOfRange,
            "column index must lie in [0, b_1)");
    const uint32_t m = chain.m();
    std::vector<uint32_t> exps;
    uint32_t vert_base = 0;  // rows consumed by vertical steps above the current depth
    uint32_t jcur = j;       // local column coordinate at the current depth
    for (uint32_t t = 1; 2 * t - 1 <= m; ++t) {
        for (uint32_t qq = 0; qq < chain.a(2 * t - 1); ++qq)
            exps.push_back(vert_base + qq * chain.b(2 * t - 1) + jcur);
        if (2 * t > m) break;  // the chain ended on a vertical step
        uint32_t b2t = chain.b(2 * t);
        uint32_t quo = jcur / b2t, rem = jcur % b2t;
        uint32_t hbase = vert_base + chain.a(2 * t - 1) * chain.b(2 * t - 1);
        if (quo < chain.a(2 * t)) {  // lands in a square placed by the horizontal step
            exps.push_back(hbase + rem);
            break;
        }
        vert_base = hbase;  // continues into the residual sub-rectangle
        jcur = rem;
    }
    std::sort(exps.begin(), exps.end());
    require(std::adjacent_find(exps.begin(), exps.end()) == exps.end(), Errc::InvalidArguments,
            "internal: duplicate beta exponent in closed form");
    require(exps.back() < chain.s, Errc::InvalidArguments, "internal: beta exponent out of range");
    return SymbolicEntry{chain.a(0) * chain.s + j, std::move(exps)};
}

std::string render_cell(const SymbolicEntry& e) {
    auto power = [](const char* sym, uint32_t k) -> std::string {
        if (k == 0) return "";
        if (k == 1) return sym;
        return std::string(sym) + "^" + std::to_string(k);
    };
    std::string apart = power("a", e.alpha_exp);
    if (e.beta_exps.size() == 1) {
        std::string bpart = power("b", e.beta_exps[0]);
        if (apart.empty() && bpart.empty()) return "1";
        return apart + bpart;
    }
    std::string inner;
    for (size_t i = 0; i < e.beta_exps.size(); ++i) {
        if (i) inner += "+";
        std::string bpart = power("b", e.beta_exps[i]);
        inner += bpart.empty() ? "1" : bpart;
    }
    return apart + "(" + inner + ")";
}

std::string render_grid(const SymbolicGrid& g, const std::string& title) {
    std::vector<std::string> cells(g.cells.size());
    std::vector<size_t> width(g.cols, 0);
    for (uint32_t i = 0; i < g.rows; ++i)
        for (uint32_t j = 0; j < g.cols; ++j) {
            std::string& c = cells[static_cast<size_t>(i) * g.cols + j];
            c = render_cell(g.at(i, j));
            width[j] = std::max(width[j], c.size());
        }
    std::ostringstream os;
    os << title << " (" << g.rows << "x" << g.cols << ")\n";
    for (uint32_t i = 0; i < g.rows; ++i) {
        for (uint32_t j = 0; j < g.cols; ++j) {
            const std::string& c = cells[static_cast<size_t>(i) * g.cols + j];
            os << c;
            if (j + 1 < g.cols) os << std::string(width[j] - c.size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

FieldElement eval_entry(const SymbolicEntry& e, const FieldElement& alpha,
                        const FieldElement& beta) {
    FieldElement sum = alpha.tower()->zero();
    for (uint32_t j : e.beta_exps) sum += beta.pow(j);
    return alpha.pow(e.alpha_exp) * sum;
}

SubspaceBasis extract_span(const SymbolicGrid& rbar, const FieldElement& alpha,
                           const FieldElement& beta, SubfieldSpec over) {
    std::vector<FieldElement> elems;
    elems.reserve(rbar.cols);
    for (uint32_t t = 0; t < rbar.cols; ++t) elems.push_back(eval_entry(rbar.at(0, t), alpha, beta));
    uint32_t dim = rank_over_subfield(elems, over);
    require(dim == rbar.cols, Errc::UnexpectedDependence,
            "first-row span has dimension " + std::to_string(dim) + ", expected " +
                std::to_string(rbar.cols));
    return SubspaceBasis{std::move(elems), over};
}

SpanReport verify_subspace(uint32_t p, uint32_t s, const FieldElement& alpha,
                           const FieldElement& beta, SubfieldSpec over) {
    SymbolicGrid b = build_grid(p, s);
    SymbolicGrid r = reshape(b, square_partition(p, s));
    SymbolicGrid rbar = interfere(r);
    SubspaceBasis basis = extract_span(rbar, alpha, beta, over);

    std::vector<FieldElement> shifted;
    shifted.reserve(static_cast<size_t>(s) * p);
    FieldElement apow = alpha.tower()->one();
    for (uint32_t u = 0; u < s; ++u) {
        for (const FieldElement& e : basis.elements) shifted.push_back(apow * e);
        apow = apow * alpha;
    }
    uint32_t dim_total = rank_over_subfield(shifted, over);
    require(dim_total == s * p, Errc::SpanDeficient,
            "shifted span has dimension " + std::to_string(dim_total) + ", expected " +
                std::to_string(s * p));
    return SpanReport{p, s, p, dim_total};
}

SpanReport verify_subspace_generic(uint32_t q, uint32_t p, uint32_t s) {
    require(is_small_prime(q), Errc::NotPrime, "base field order");
    require(s >= 2 && p > s, Errc::InvalidArguments, "need p > s >= 2");
    using detail::Poly;
    const uint32_t n = p * s;
    Poly h = detail::find_irreducible(q, n);

    // Frobenius y -> y^q as a matrix over the power basis of F_q[x]/(h)
    FqMatrix frob(n, n, q);
    Poly xq = detail::poly_powmod({0, 1}, q, h, q);
    Poly col = {1};
    for (uint32_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i]) frob.set(static_cast<uint32_t>(i), c, col[i]);
        col = detail::poly_mulmod(col, xq, h, q);
    }
    auto frob_pow = [&](std::vector<uint8_t> v, uint32_t times) {
        for (uint32_t t = 0; t < times; ++t) v = frob.apply(v);
        return v;
    };

    // alpha: a degree-p element, i.e. a generator of the fixed field of
    // Frobenius^p that no proper subfield contains
    FqMatrix fixed(n, n, q);
    for (uint32_t c = 0; c < n; ++c) {
        std::vector<uint8_t> e(n, 0);
        e[c] = 1;
        auto img = frob_pow(std::move(e), p);
        for (uint32_t r2 = 0; r2 < n; ++r2) {
            uint32_t v = img[r2] + (r2 == c ? q - 1 : 0);
            if (v % q) fixed.set(r2, c, v % q);
        }
    }
    auto kernel = fixed.nullspace();
    require(kernel.size() == p, Errc::InvalidArguments, "internal: fixed field has wrong dimension");

    std::vector<uint32_t> proper_divs;
    for (uint32_t d = 1; d < p; ++d)
        if (p % d == 0) proper_divs.push_back(d);

    std::vector<uint8_t> alpha;
    std::vector<uint8_t> combo(p, 0);
    for (;;) {
        uint32_t i = 0;
        while (i < p && ++combo[i] == q) combo[i++] = 0;
        require(i < p, Errc::InvalidArguments, "internal: no degree-p element found");
        std::vector<uint8_t> cand(n, 0);
        for (uint32_t t = 0; t < p; ++t) {
            if (!combo[t]) continue;
            for (uint32_t r2 = 0; r2 < n; ++r2)
                cand[r2] = static_cast<uint8_t>((cand[r2] + combo[t] * kernel[t][r2]) % q);
        }
        bool full_degree = true;
        for (uint32_t d : proper_divs)
            if (frob_pow(cand, d) == cand) {
                full_degree = false;
                break;
            }
        if (full_degree) {
            alpha = std::move(cand);
            break;
        }
    }

    // beta = class of x: degree n over F_q, hence degree s over F_q(alpha)
    auto to_poly = [](const std::vector<uint8_t>& v) {
        Poly pl(v.begin(), v.end());
        detail::poly_trim(pl);
        return pl;
    };
    Poly alpha_poly = to_poly(alpha);
    std::vector<Poly> alpha_pow(p + s, Poly{1});
    for (size_t t = 1; t < alpha_pow.size(); ++t)
        alpha_pow[t] = detail::poly_mulmod(alpha_pow[t - 1], alpha_poly, h, q);
    std::vector<Poly> beta_pow(s, Poly{1});
    for (uint32_t t = 1; t < s; ++t)
        beta_pow[t] = detail::poly_mulmod(beta_pow[t - 1], {0, 1}, h, q);

    auto eval_sym = [&](const SymbolicEntry& e) {
        Poly sum;
        for (uint32_t j : e.beta_exps) sum = detail::poly_add(sum, beta_pow[j], q);
        return detail::poly_mulmod(alpha_pow[e.alpha_exp], sum, h, q);
    };

    SymbolicGrid b = build_grid(p, s);
    SymbolicGrid rbar = interfere(reshape(b, square_partition(p, s)));
    std::vector<Poly> basis;
    for (uint32_t t = 0; t < p; ++t) basis.push_back(eval_sym(rbar.at(0, t)));

    auto rank_of = [&](const std::vector<Poly>& elems) {
        FqMatrix m(static_cast<uint32_t>(elems.size()), n, q);
        for (uint32_t r2 = 0; r2 < elems.size(); ++r2)
            for (size_t c2 = 0; c2 < elems[r2].size(); ++c2)
                if (elems[r2][c2]) m.set(r2, static_cast<uint32_t>(c2), elems[r2][c2]);
        return m.rank();
    };
    uint32_t dim_span = rank_of(basis);
    require(dim_span == p, Errc::UnexpectedDependence,
            "first-row span has dimension " + std::to_string(dim_span) + ", expected " +
                std::to_string(p));

    std::vector<Poly> shifted;
    for (uint32_t u = 0; u < s; ++u)
        for (const Poly& e : basis) shifted.push_back(detail::poly_mulmod(alpha_pow[u], e, h, q));
    uint32_t dim_total = rank_of(shifted);
    require(dim_total == n, Errc::SpanDeficient,
            "shifted span has dimension " + std::to_string(dim_total) + ", expected " +
                std::to_string(n));
    return SpanReport{p, s, dim_span, dim_total};
}

}  // namespace rsmsr
