#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsmsr/euclid_partition.hpp"
#include "rsmsr/field_tower.hpp"

namespace rsmsr {

/// alpha^alpha_exp * sum_{j in beta_exps} beta^j. beta_exps is sorted,
/// distinct and nonempty; it is a singleton everywhere except in the
/// interfered residual columns.
struct SymbolicEntry {
    uint32_t alpha_exp = 0;
    std::vector<uint32_t> beta_exps;
    friend bool operator==(const SymbolicEntry&, const SymbolicEntry&) = default;
};

struct SymbolicGrid {
    uint32_t rows = 0, cols = 0;
    std::vector<SymbolicEntry> cells;  // row-major

    SymbolicEntry& at(uint32_t r, uint32_t c) { return cells[static_cast<size_t>(r) * cols + c]; }
    const SymbolicEntry& at(uint32_t r, uint32_t c) const {
        return cells[static_cast<size_t>(r) * cols + c];
    }
};

/// The p x s source grid: entry (i,j) = alpha^i (alpha beta)^j.
SymbolicGrid build_grid(uint32_t p, uint32_t s);

/// s x p grid obtained from the overall transpose of `b` followed by a
/// transpose of every partition square: R(y+u, x+v) = B(x+u, y+v).
SymbolicGrid reshape(const SymbolicGrid& b, const SquarePartition& part);

/// Column-wise interference: each entry keeps its alpha exponent and takes
/// the set of all beta exponents appearing in its column. Identity on any
/// column whose entries already share one beta exponent (in particular the
/// first a_0*s columns).
SymbolicGrid interfere(const SymbolicGrid& r);

/// (upper-left row y, within-square column v) for every partition square
/// intersecting column j, in placement order.
std::vector<std::pair<uint32_t, uint32_t>> column_intersections(uint32_t j,
                                                                const SquarePartition& part);

/// Closed form of the interfered first-row entry in residual column j,
/// assembled from the chain alone (no grid construction).
SymbolicEntry closed_form_entry(uint32_t j, const EuclidChain& chain);

std::string render_cell(const SymbolicEntry& e);
std::string render_grid(const SymbolicGrid& g, const std::string& title);

FieldElement eval_entry(const SymbolicEntry& e, const FieldElement& alpha,
                        const FieldElement& beta);

struct SubspaceBasis {
    std::vector<FieldElement> elements;
    SubfieldSpec over;
};

/// Evaluates the first row of the interfered grid and checks that the p
/// elements are independent over `over`.
SubspaceBasis extract_span(const SymbolicGrid& rbar, const FieldElement& alpha,
                           const FieldElement& beta, SubfieldSpec over);

struct SpanReport {
    uint32_t p = 0, s = 0;
    uint32_t dim_span = 0;   // expected: p
    uint32_t dim_total = 0;  // expected: s*p
    bool ok() const { return dim_span == p && dim_total == s * p; }
};

/// Full span check: dim(S) = p and dim(S + alpha S + ... + alpha^{s-1} S)
/// = s*p over `over`. alpha must have degree p over `over` and beta degree s
/// over the compositum.
SpanReport verify_subspace(uint32_t p, uint32_t s, const FieldElement& alpha,
                           const FieldElement& beta, SubfieldSpec over);

/// Same check realized inside the single extension F_q[x]/(h), deg h = p*s,
/// with beta the class of x and alpha a computed degree-p subfield element.
/// Covers parameters the tensor tower cannot host (composite p, or p and s
/// sharing a factor).
SpanReport verify_subspace_generic(uint32_t q, uint32_t p, uint32_t s);

}  // namespace rsmsr
