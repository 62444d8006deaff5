#include "rsmsr/grs_code.hpp"

#include <algorithm>

namespace rsmsr {

CodeSpec CodeSpec::make(TowerPtr tower, uint32_t n, uint32_t k) {
    require(tower != nullptr, Errc::InvalidArguments, "null tower");
    require(n == tower->num_primes(), Errc::InvalidArguments,
            "code length must equal the number of tower primes");
    require(k >= 1 && k < n, Errc::InvalidArguments, "need 1 <= k < n");
    CodeSpec spec;
    spec.tower = tower;
    spec.n = n;
    spec.k = k;
    for (uint32_t i = 1; i <= n; ++i) spec.points.push_back(tower->alpha(i));
    return spec;
}

Codeword encode(const CodeSpec& spec, std::span<const FieldElement> message) {
    require(message.size() == spec.k, Errc::LengthMismatch, "message must have k symbols");
    Codeword cw;
    for (uint32_t i = 0; i < spec.n; ++i) {
        FieldElement acc = spec.tower->zero();
        for (uint32_t j = spec.k; j-- > 0;) acc = acc * spec.points[i] + message[j];
        cw.symbols.push_back(acc);
    }
    return cw;
}

std::vector<FieldElement> dual_multipliers(const CodeSpec& spec) {
    std::vector<FieldElement> u;
    for (uint32_t i = 0; i < spec.n; ++i) {
        FieldElement prod = spec.tower->one();
        for (uint32_t j = 0; j < spec.n; ++j)
            if (j != i) prod = prod * (spec.points[i] - spec.points[j]);
        u.push_back(prod.inv());
    }
    return u;
}

namespace {

void check_helper_set(const CodeSpec& spec, uint32_t failed, const std::vector<uint32_t>& helpers,
                      uint32_t lo, uint32_t hi) {
    require(failed >= 1 && failed <= spec.n, Errc::IndexOutOfRange, "failed node index");
    require(helpers.size() >= lo && helpers.size() <= hi, Errc::BadHelperSet,
            "helper set has size " + std::to_string(helpers.size()));
    std::vector<uint32_t> sorted(helpers);
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Errc::BadHelperSet,
            "duplicate helper");
    for (uint32_t j : sorted) {
        require(j >= 1 && j <= spec.n, Errc::BadHelperSet, "helper index out of range");
        require(j != failed, Errc::BadHelperSet, "failed node cannot help");
    }
}

}  // namespace

Codeword repair_dual_word(const CodeSpec& spec, uint32_t failed,
                          const std::vector<uint32_t>& helpers, uint32_t t) {
    check_helper_set(spec, failed, helpers, spec.k, spec.n - 1);
    uint32_t d = static_cast<uint32_t>(helpers.size());
    require(t <= d - spec.k, Errc::BadT, "exponent t exceeds d - k");
    // deg(x^t h(x)) = t + n-1-d <= n-k-1, so the word lies in the dual code
    std::vector<char> in_set(spec.n + 1, 0);
    in_set[failed] = 1;
    for (uint32_t j : helpers) in_set[j] = 1;
    std::vector<FieldElement> u = dual_multipliers(spec);
    Codeword w;
    for (uint32_t j = 1; j <= spec.n; ++j) {
        FieldElement h = spec.tower->one();
        for (uint32_t e = 1; e <= spec.n; ++e)
            if (!in_set[e]) h = h * (spec.points[j - 1] - spec.points[e - 1]);
        w.symbols.push_back(u[j - 1] * spec.points[j - 1].pow(t) * h);
    }
    return w;
}

std::vector<FieldElement> interpolate_message(const CodeSpec& spec,
                                              std::span<const uint32_t> positions,
                                              std::span<const FieldElement> values) {
    require(positions.size() == spec.k && values.size() == spec.k, Errc::LengthMismatch,
            "need exactly k positions and values");
    const TowerPtr& t = spec.tower;
    // master polynomial N(x) = prod (x - alpha_p)
    std::vector<FieldElement> master(spec.k + 1, t->zero());
    master[0] = t->one();
    uint32_t deg = 0;
    for (uint32_t p : positions) {
        require(p >= 1 && p <= spec.n, Errc::IndexOutOfRange, "position out of range");
        const FieldElement& a = spec.points[p - 1];
        for (uint32_t i = deg + 2; i-- > 0;) {
            FieldElement low = (i == 0) ? t->zero() : master[i - 1];
            master[i] = low - master[i] * a;
        }
        ++deg;
    }
    std::vector<FieldElement> result(spec.k, t->zero());
    for (uint32_t idx = 0; idx < spec.k; ++idx) {
        const FieldElement& a = spec.points[positions[idx] - 1];
        // N(x) / (x - alpha) by synthetic division
        std::vector<FieldElement> quo(spec.k, t->zero());
        FieldElement carry = master[spec.k];
        for (uint32_t i = spec.k; i-- > 0;) {
            quo[i] = carry;
            carry = master[i] + carry * a;
        }
        FieldElement denom = t->zero();
        {  // quo evaluated at alpha
            FieldElement acc = t->zero();
            for (uint32_t i = spec.k; i-- > 0;) acc = acc * a + quo[i];
            denom = acc;
        }
        FieldElement scale = values[idx] * denom.inv();
        for (uint32_t i = 0; i < spec.k; ++i) result[i] += scale * quo[i];
    }
    return result;
}

bool mds_check(const CodeSpec& spec, uint32_t trials, uint64_t seed) {
    SplitMix64 rng(seed);
    for (uint32_t trial = 0; trial < trials; ++trial) {
        std::vector<FieldElement> msg;
        for (uint32_t i = 0; i < spec.k; ++i) msg.push_back(spec.tower->random_element(rng));
        Codeword cw = encode(spec, msg);
        // random k-subset of positions
        std::vector<uint32_t> pool(spec.n);
        for (uint32_t i = 0; i < spec.n; ++i) pool[i] = i + 1;
        for (uint32_t i = 0; i < spec.k; ++i)
            std::swap(pool[i], pool[i + rng.below(spec.n - i)]);
        std::vector<uint32_t> positions(pool.begin(), pool.begin() + spec.k);
        std::vector<FieldElement> vals;
        for (uint32_t p : positions) vals.push_back(cw.symbols[p - 1]);
        auto rec = interpolate_message(spec, positions, vals);
        for (uint32_t i = 0; i < spec.k; ++i)
            if (rec[i] != msg[i]) return false;
    }
    return true;
}

}  // namespace rsmsr
