#include "rsmsr/repair_scheme.hpp"

#include <algorithm>

#include "rsmsr/basis_transform.hpp"

namespace rsmsr {

RepairPlan plan_repair(const CodeSpec& spec, uint32_t failed, std::vector<uint32_t> helpers) {
    require(failed >= 1 && failed <= spec.n, Errc::IndexOutOfRange, "failed node index");
    require(helpers.size() == spec.d(), Errc::BadHelperSet,
            "need exactly d = s+k-1 = " + std::to_string(spec.d()) + " helpers");
    std::sort(helpers.begin(), helpers.end());
    require(std::adjacent_find(helpers.begin(), helpers.end()) == helpers.end(),
            Errc::BadHelperSet, "duplicate helper");
    for (uint32_t j : helpers) {
        require(j >= 1 && j <= spec.n, Errc::BadHelperSet, "helper index out of range");
        require(j != failed, Errc::BadHelperSet, "failed node cannot help");
    }

    const TowerPtr& tower = spec.tower;
    const uint32_t s = tower->s();
    RepairPlan plan;
    plan.spec = spec;
    plan.failed = failed;
    plan.helpers = std::move(helpers);
    plan.node_prime = tower->primes()[failed - 1];
    plan.subfield = SubfieldSpec::f_minus(failed);

    // repair subspace for (p_i, s), instantiated with alpha = alpha_i over F_i
    const FieldElement alpha_i = tower->alpha(failed);
    SymbolicGrid b = build_grid(plan.node_prime, s);
    SymbolicGrid rbar = interfere(reshape(b, square_partition(plan.node_prime, s)));
    plan.subspace = extract_span(rbar, alpha_i, tower->beta(), plan.subfield).elements;

    plan.dual_mult = dual_multipliers(spec);

    std::vector<char> in_set(spec.n + 1, 0);
    in_set[failed] = 1;
    for (uint32_t j : plan.helpers) in_set[j] = 1;
    for (uint32_t j = 1; j <= spec.n; ++j) {
        FieldElement h = tower->one();
        for (uint32_t e = 1; e <= spec.n; ++e)
            if (!in_set[e]) h = h * (spec.points[j - 1] - spec.points[e - 1]);
        plan.h_values.push_back(h);
    }

    const uint32_t p_i = plan.node_prime;
    FieldElement kappa = plan.dual_mult[failed - 1] * plan.h_values[failed - 1];
    for (uint32_t t = 0; t < s; ++t) {
        for (uint32_t m = 0; m < p_i; ++m) plan.query_basis.push_back(plan.subspace[m] * kappa);
        kappa = kappa * alpha_i;
    }

    // the query basis must span E over F_i (rank ell over F_q together with
    // an F_i-basis); holds whenever the subspace construction is sound
    uint32_t dim = rank_over_subfield(plan.query_basis, plan.subfield);
    require(dim == s * p_i, Errc::SubspaceRankFailure,
            "query basis spans dimension " + std::to_string(dim) + " over F_i, expected " +
                std::to_string(s * p_i));

    plan.dual_query = dual_basis(plan.query_basis, plan.subfield);
    for (uint32_t a = 0; a < s * p_i; ++a) {
        FieldElement diag = (plan.query_basis[a] * plan.dual_query[a]).trace_to(plan.subfield);
        require(diag == tower->one(), Errc::SubspaceRankFailure, "trace-duality check failed");
    }
    return plan;
}

std::vector<FieldElement> helper_response(const FieldElement& symbol, uint32_t helper,
                                          const RepairPlan& plan) {
    require(std::find(plan.helpers.begin(), plan.helpers.end(), helper) != plan.helpers.end(),
            Errc::NotAHelper, "node " + std::to_string(helper) + " is not in the helper set");
    const FieldElement scaled = symbol * plan.dual_mult[helper - 1];
    std::vector<FieldElement> out;
    out.reserve(plan.node_prime);
    for (uint32_t m = 0; m < plan.node_prime; ++m) {
        FieldElement tr = (scaled * plan.subspace[m]).trace_to(plan.subfield);
        require(tr.is_in_subfield(plan.subfield), Errc::TraceNotInSubfield, "helper response");
        out.push_back(std::move(tr));
    }
    return out;
}

FieldElement reconstruct(const std::vector<std::vector<FieldElement>>& responses,
                         const RepairPlan& plan) {
    const uint32_t d = plan.d(), p_i = plan.node_prime, s = plan.spec.tower->s();
    require(responses.size() == d, Errc::MissingResponse, "need one response list per helper");
    for (const auto& r : responses)
        require(r.size() == p_i, Errc::MissingResponse, "response must carry p_i symbols");

    const TowerPtr& tower = plan.spec.tower;
    // coef[j][t] = alpha_j^t h(alpha_j), an element of F_i
    std::vector<std::vector<FieldElement>> coef(d);
    for (uint32_t idx = 0; idx < d; ++idx) {
        uint32_t j = plan.helpers[idx];
        FieldElement cur = plan.h_values[j - 1];
        for (uint32_t t = 0; t < s; ++t) {
            coef[idx].push_back(cur);
            cur = cur * plan.spec.points[j - 1];
        }
    }
    FieldElement result = tower->zero();
    for (uint32_t t = 0; t < s; ++t) {
        for (uint32_t m = 0; m < p_i; ++m) {
            FieldElement acc = tower->zero();
            for (uint32_t idx = 0; idx < d; ++idx) acc += coef[idx][t] * responses[idx][m];
            acc = -acc;  // tr(c_i zeta_{t,m}) = -sum_j alpha_j^t h(alpha_j) tr(c_j u_j e_m)
            require(acc.is_in_subfield(plan.subfield), Errc::TraceNotInSubfield,
                    "recombined trace");
            result += acc * plan.dual_query[t * p_i + m];
        }
    }
    return result;
}

BandwidthReport measure_bandwidth(const RepairPlan& plan) {
    const uint64_t ell = plan.spec.tower->ell();
    const uint32_t s = plan.spec.tower->s();
    const uint64_t subdeg = ell / (static_cast<uint64_t>(s) * plan.node_prime);  // [F_i : F_q]
    BandwidthReport rep;
    rep.fi_symbols_per_helper = plan.node_prime;
    rep.fq_symbols = static_cast<uint64_t>(plan.d()) * plan.node_prime * subdeg;
    rep.cutset_bound = static_cast<uint64_t>(plan.d()) * ell / (plan.d() - plan.spec.k + 1);
    rep.naive_fq_symbols = static_cast<uint64_t>(plan.spec.k) * ell;
    rep.optimal = rep.fq_symbols == rep.cutset_bound;
    return rep;
}

RepairTranscript run_repair(const Codeword& cw, const RepairPlan& plan) {
    require(cw.symbols.size() == plan.spec.n, Errc::LengthMismatch, "codeword length");
    RepairTranscript tr;
    tr.failed = plan.failed;
    tr.helpers = plan.helpers;
    for (uint32_t j : plan.helpers)
        tr.responses.push_back(helper_response(cw.symbols[j - 1], j, plan));
    tr.downloaded_fq_symbols = measure_bandwidth(plan).fq_symbols;
    tr.reconstructed = reconstruct(tr.responses, plan);
    return tr;
}

SubpackComparison compare_subpacketization(uint32_t s, uint32_t n) {
    require(s >= 2, Errc::InvalidArguments, "need s >= 2");
    require(n >= 1, Errc::InvalidArguments, "need n >= 1");
    SubpackComparison cmp;
    cmp.ell_new = BigUint(s);
    cmp.ell_cong = BigUint(s);
    cmp.ratio = 1.0;
    uint64_t p = s;
    while (cmp.primes_new.size() < n) {
        ++p;
        if (is_small_prime(p)) {
            cmp.primes_new.push_back(static_cast<uint32_t>(p));
            cmp.ell_new *= p;
        }
    }
    p = 1;
    while (cmp.primes_cong.size() < n) {
        ++p;
        if (p % s == 1 && is_small_prime(p)) {
            cmp.primes_cong.push_back(static_cast<uint32_t>(p));
            cmp.ell_cong *= p;
        }
    }
    for (uint32_t i = 0; i < n; ++i)
        cmp.ratio *= static_cast<double>(cmp.primes_cong[i]) / cmp.primes_new[i];
    return cmp;
}

}  // namespace rsmsr
