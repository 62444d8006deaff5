#include "rsmsr/cli_app.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsmsr/basis_transform.hpp"
#include "rsmsr/euclid_partition.hpp"
#include "rsmsr/field_tower.hpp"
#include "rsmsr/grs_code.hpp"
#include "rsmsr/repair_scheme.hpp"

using nlohmann::json;

namespace rsmsr::cli {

namespace {

json tower_json(const Tower& t) {
    json f = json::array();
    for (uint32_t i = 1; i <= t.num_primes(); ++i) f.push_back(t.minpoly_alpha(i));
    return json{{"q", t.q()},           {"s", t.s()}, {"primes", t.primes()},
                {"f", std::move(f)},    {"g", t.minpoly_beta()},
                {"ell", t.ell()}};
}

json strings(const std::vector<FieldElement>& elems) {
    json arr = json::array();
    for (const auto& e : elems) arr.push_back(e.to_string());
    return arr;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// d-subsets of [n] minus {fail}, lexicographic, at most `cap`.
std::vector<std::vector<uint32_t>> helper_sets(uint32_t n, uint32_t fail, uint32_t d,
                                               uint32_t cap) {
    std::vector<uint32_t> pool;
    for (uint32_t j = 1; j <= n; ++j)
        if (j != fail) pool.push_back(j);
    std::vector<std::vector<uint32_t>> sets;
    std::vector<uint32_t> idx(d);
    for (uint32_t i = 0; i < d; ++i) idx[i] = i;
    while (sets.size() < cap) {
        std::vector<uint32_t> set;
        for (uint32_t i : idx) set.push_back(pool[i]);
        sets.push_back(std::move(set));
        // next combination
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && idx[i] == pool.size() - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (uint32_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sets;
}

std::vector<FieldElement> seeded_message(const CodeSpec& spec, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<FieldElement> msg;
    for (uint32_t i = 0; i < spec.k; ++i) msg.push_back(spec.tower->random_element(rng));
    return msg;
}

int validate_code_opts(const CodeOpts& o, bool for_repair) {
    if (o.primes.empty()) return usage_error("--primes must not be empty");
    if (o.n != o.primes.size()) return usage_error("--n must equal the number of primes");
    if (o.k < 1 || o.k >= o.n) return usage_error("need 1 <= k < n");
    if (for_repair) {
        uint32_t d = o.s + o.k - 1;
        if (!(o.k < d && d < o.n + 1 && d <= o.n - 1))
            return usage_error("need k < d = s+k-1 <= n-1");
    }
    return 0;
}

}  // namespace

int cmd_partition(const PartitionOpts& o, std::ostream& out) {
    if (o.s < 1 || o.p <= o.s) return usage_error("need p > s >= 1");
    EuclidChain chain = euclid_chain(o.p, o.s);
    SquarePartition part = square_partition(o.p, o.s);
    json squares = json::array();
    for (const Square& sq : part.squares)
        squares.push_back(json{{"row", sq.row}, {"col", sq.col}, {"side", sq.side}});
    json doc{{"schema", 1},
             {"p", o.p},
             {"s", o.s},
             {"chain", json{{"quotients", chain.quotients},
                            {"remainders", chain.remainders},
                            {"gcd", chain.gcd()}}},
             {"squares", std::move(squares)}};
    out << doc.dump(2) << "\n";
    if (o.ascii) {
        std::vector<std::string> grid(o.p, std::string(o.s, '?'));
        for (size_t i = 0; i < part.squares.size(); ++i) {
            const Square& sq = part.squares[i];
            char c = static_cast<char>('A' + i % 26);
            for (uint32_t r = 0; r < sq.side; ++r)
                for (uint32_t col = 0; col < sq.side; ++col) grid[sq.row + r][sq.col + col] = c;
        }
        for (const auto& line : grid) out << line << "\n";
    }
    return 0;
}

int cmd_transform(const TransformOpts& o, std::ostream& out) {
    if (o.s < 1 || o.p <= o.s) return usage_error("need p > s >= 1");
    SymbolicGrid b = build_grid(o.p, o.s);
    SymbolicGrid r = reshape(b, square_partition(o.p, o.s));
    SymbolicGrid rbar = interfere(r);
    out << render_grid(b, "B");
    out << "\n" << render_grid(r, "R = reshape(B)");
    out << "\n" << render_grid(rbar, "Rbar = interfere(R)");
    return 0;
}

int cmd_verify_subspace(const VerifySubspaceOpts& o, std::ostream& out) {
    if (o.s < 2 || o.p <= o.s) return usage_error("need p > s >= 2");
    SpanReport rep;
    std::string method;
    if (is_small_prime(o.p)) {
        TowerPtr tower = Tower::make(o.q, o.s, {o.p});
        rep = verify_subspace(o.p, o.s, tower->alpha(1), tower->beta(), SubfieldSpec::base());
        method = "tower";
    } else {
        rep = verify_subspace_generic(o.q, o.p, o.s);
        method = "single-extension";
    }
    json doc{{"schema", 1}, {"q", o.q},           {"p", o.p},
             {"s", o.s},    {"dimS", rep.dim_span}, {"dimK", rep.dim_total},
             {"ok", rep.ok()}, {"method", method}};
    out << doc.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_build_code(const CodeOpts& o, std::ostream& out) {
    if (int rc = validate_code_opts(o, false)) return rc;
    TowerPtr tower = Tower::make(o.q, o.s, o.primes);
    CodeSpec spec = CodeSpec::make(tower, o.n, o.k);
    auto msg = seeded_message(spec, o.seed);
    Codeword cw = encode(spec, msg);
    json doc{{"schema", 1},
             {"tower", tower_json(*tower)},
             {"code", json{{"n", spec.n}, {"k", spec.k}, {"d", spec.d()}}},
             {"seed", o.seed},
             {"message", strings(msg)},
             {"codeword", strings(cw.symbols)}};
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_repair_demo(const RepairDemoOpts& o, std::ostream& out) {
    if (int rc = validate_code_opts(o.code, true)) return rc;
    if (o.fail < 1 || o.fail > o.code.n) return usage_error("--fail must name a node in [1, n]");
    TowerPtr tower = Tower::make(o.code.q, o.code.s, o.code.primes);
    CodeSpec spec = CodeSpec::make(tower, o.code.n, o.code.k);
    auto msg = seeded_message(spec, o.code.seed);
    Codeword cw = encode(spec, msg);

    RepairPlan plan = plan_repair(spec, o.fail, o.helpers);
    RepairTranscript tr = run_repair(cw, plan);
    BandwidthReport bw = measure_bandwidth(plan);
    bool ok = tr.reconstructed == cw.symbols[o.fail - 1];

    json responses = json::array();
    for (size_t i = 0; i < tr.helpers.size(); ++i)
        responses.push_back(json{{"helper", tr.helpers[i]}, {"symbols", strings(tr.responses[i])}});
    json doc{{"schema", 1},
             {"tower", tower_json(*tower)},
             {"code", json{{"n", spec.n}, {"k", spec.k}, {"d", spec.d()}}},
             {"seed", o.code.seed},
             {"failed", tr.failed},
             {"helpers", tr.helpers},
             {"responses", std::move(responses)},
             {"fiSymbolsPerHelper", bw.fi_symbols_per_helper},
             {"fqSymbols", tr.downloaded_fq_symbols},
             {"cutsetBound", bw.cutset_bound},
             {"naiveFqSymbols", bw.naive_fq_symbols},
             {"reconstructed", tr.reconstructed.to_string()},
             {"expected", cw.symbols[o.fail - 1].to_string()},
             {"ok", ok}};
    out << doc.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
    if (int rc = validate_code_opts(o.code, true)) return rc;
    TowerPtr tower = Tower::make(o.code.q, o.code.s, o.code.primes);
    CodeSpec spec = CodeSpec::make(tower, o.code.n, o.code.k);

    struct Task {
        uint32_t node;
        std::vector<uint32_t> helpers;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (uint32_t node = 1; node <= spec.n; ++node) {
        auto sets = helper_sets(spec.n, node, spec.d(), o.max_helper_sets);
        for (size_t si = 0; si < sets.size(); ++si)
            tasks.push_back({node, sets[si], o.code.seed ^ (node * 1000003ull + si)});
    }
    std::vector<std::string> rows(tasks.size());
    std::atomic<bool> all_ok{true};

    auto worker_body = [&](size_t ti) {
        const Task& task = tasks[ti];
        auto msg = seeded_message(spec, task.seed);
        Codeword cw = encode(spec, msg);
        RepairPlan plan = plan_repair(spec, task.node, task.helpers);
        RepairTranscript tr = run_repair(cw, plan);
        BandwidthReport bw = measure_bandwidth(plan);
        bool ok = tr.reconstructed == cw.symbols[task.node - 1] && bw.optimal;
        if (!ok) all_ok = false;
        std::string hs;
        for (size_t i = 0; i < task.helpers.size(); ++i)
            hs += (i ? "-" : "") + std::to_string(task.helpers[i]);
        std::ostringstream row;
        row << task.node << "," << plan.node_prime << "," << hs << ","
            << static_cast<uint64_t>(plan.d()) * plan.node_prime << "," << bw.fq_symbols << ","
            << bw.cutset_bound << "," << bw.naive_fq_symbols << "," << (ok ? "1" : "0");
        rows[ti] = row.str();
    };

    uint32_t threads = 1;
    if (const char* env = std::getenv("RSMSR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 1) threads = static_cast<uint32_t>(v);
    }
    threads = std::min<uint32_t>(threads, static_cast<uint32_t>(tasks.size()));
    if (threads <= 1) {
        for (size_t ti = 0; ti < tasks.size(); ++ti) worker_body(ti);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (size_t ti = next.fetch_add(1); ti < tasks.size(); ti = next.fetch_add(1))
                    worker_body(ti);
            });
        for (auto& th : pool) th.join();
    }

    out << "node,p_i,helpers,fiSymbols,fqSymbols,cutsetBound,naiveFqSymbols,ok\n";
    for (const auto& row : rows) out << row << "\n";
    return all_ok ? 0 : 1;
}

int cmd_compare_subpack(const CompareSubpackOpts& o, std::ostream& out) {
    SubpackComparison cmp = compare_subpacketization(o.s, o.n);
    json doc{{"schema", 1},
             {"s", o.s},
             {"n", o.n},
             {"primesNew", cmp.primes_new},
             {"primesCongruent", cmp.primes_cong},
             {"ellNew", cmp.ell_new.to_string()},
             {"ellCongruent", cmp.ell_cong.to_string()},
             {"ratio", cmp.ratio}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Reed-Solomon codes with bandwidth-optimal single-node repair"};
    app.require_subcommand(1);
    app.fallthrough();  // let --output appear after the subcommand name
    std::string output;
    app.add_option("--output", output, "write the report to this file instead of stdout");

    PartitionOpts po;
    auto* partition = app.add_subcommand("partition", "Euclidean square partition of a p x s grid");
    partition->add_option("--p", po.p, "number of rows")->required();
    partition->add_option("--s", po.s, "number of columns")->required();
    partition->add_flag("--ascii", po.ascii, "also print the tiling as a character grid");

    TransformOpts to;
    auto* transform = app.add_subcommand("transform", "print the B / reshape / interference grids");
    transform->add_option("--p", to.p)->required();
    transform->add_option("--s", to.s)->required();

    VerifySubspaceOpts vo;
    auto* verify = app.add_subcommand("verify-subspace", "span check of the repair subspace");
    verify->add_option("--q", vo.q, "base field order")->required();
    verify->add_option("--p", vo.p)->required();
    verify->add_option("--s", vo.s)->required();

    CodeOpts bo;
    auto add_code_opts = [](CLI::App* cmd, CodeOpts& c) {
        cmd->add_option("--q", c.q, "base field order")->required();
        cmd->add_option("--s", c.s, "repair parameter s = d+1-k")->required();
        cmd->add_option("--primes", c.primes, "extension degrees, one per node")
            ->required()
            ->delimiter(',');
        cmd->add_option("--n", c.n, "code length")->required();
        cmd->add_option("--k", c.k, "code dimension")->required();
        cmd->add_option("--seed", c.seed, "seed for message sampling");
    };
    auto* build = app.add_subcommand("build-code", "emit the code configuration and a sample codeword");
    add_code_opts(build, bo);

    RepairDemoOpts ro;
    auto* demo = app.add_subcommand("repair-demo", "repair one node and print the transcript");
    add_code_opts(demo, ro.code);
    demo->add_option("--fail", ro.fail, "node to erase (1-based)")->required();
    demo->add_option("--helpers", ro.helpers, "helper nodes")->required()->delimiter(',');

    BenchOpts eo;
    auto* bench = app.add_subcommand("bench", "repair every node, tabulating bandwidth");
    add_code_opts(bench, eo.code);
    bench->add_option("--max-helper-sets", eo.max_helper_sets, "helper sets per node");

    CompareSubpackOpts co;
    auto* compare = app.add_subcommand("compare-subpack", "subpacketization against the congruent-prime variant");
    compare->add_option("--s", co.s)->required();
    compare->add_option("--n", co.n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        file.open(output);
        if (!file) return usage_error("cannot open output file " + output);
        out = &file;
    }

    try {
        if (partition->parsed()) return cmd_partition(po, *out);
        if (transform->parsed()) return cmd_transform(to, *out);
        if (verify->parsed()) return cmd_verify_subspace(vo, *out);
        if (build->parsed()) return cmd_build_code(bo, *out);
        if (demo->parsed()) return cmd_repair_demo(ro, *out);
        if (bench->parsed()) return cmd_bench(eo, *out);
        if (compare->parsed()) return cmd_compare_subpack(co, *out);
    } catch (const Error& e) {
        json diag{{"schema", 1}, {"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    }
    return 2;
}

}  // namespace rsmsr::cli
