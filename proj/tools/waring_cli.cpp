// waring: sums-of-k-th-powers toolkit.
//
// Subcommands: sieve, recur, replay, bound, asym, bench, tables.
// Exit codes: 0 success, 1 target not met (unsaturated interval, tolerance
// violations, invalid certificate, infeasible search), 2 bad arguments or
// malformed input, 3 resource or I/O failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "waring/bounds.hpp"
#include "waring/csv.hpp"
#include "waring/dump.hpp"
#include "waring/errors.hpp"
#include "waring/fixtures.hpp"
#include "waring/optimize.hpp"
#include "waring/recursion.hpp"
#include "waring/replay.hpp"
#include "waring/report.hpp"
#include "waring/sieve.hpp"

namespace {

using namespace waring;

// Large-run guard: estimated working sets past this need --allow-large.
constexpr std::uint64_t large_run_bytes = std::uint64_t{256} << 20;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        if (!std::cout)
            throw IoError("write failed on stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("write failed on '" + path + "'");
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed on '" + path + "'");
    return buf.str();
}

std::uint64_t mem_cap_from_env_or(std::uint64_t flag_value, bool flag_set) {
    if (flag_set)
        return flag_value;
    if (const char* env = std::getenv("WARING_MEM_CAP")) {
        try {
            return parse_uint_field(env, "WARING_MEM_CAP");
        } catch (const FormatError&) {
            throw ArgumentError("WARING_MEM_CAP must be a byte count, got '" +
                                std::string(env) + "'");
        }
    }
    return default_mem_cap;
}

struct SieveArgs {
    unsigned k = 0;
    std::uint64_t lo = 0, hi = 0;
    std::uint32_t s_max = 64;
    unsigned threads = 1;
    std::size_t block_words = default_block_words;
    std::uint64_t mem_cap = default_mem_cap;
    bool mem_cap_set = false;
    bool allow_large = false;
    bool stable = false;
    bool count = false;
    std::string json_path, csv_path, dump_path;
};

int run_sieve(const SieveArgs& a) {
    const std::uint64_t cap = mem_cap_from_env_or(a.mem_cap, a.mem_cap_set);
    const std::uint64_t need = sieve_memory_estimate(a.hi);
    if (need > large_run_bytes && !a.allow_large)
        throw ArgumentError(
            "estimated working set " + std::to_string(need) +
            " bytes exceeds " + std::to_string(large_run_bytes) +
            "; pass --allow-large to acknowledge the allocation");

    SieveOptions opt;
    opt.threads = a.threads;
    opt.block_words = a.block_words;
    opt.mem_cap_bytes = cap;

    ReachSet final_set(1);
    SieveReport rep = compute_g_interval(a.k, a.lo, a.hi, a.s_max, opt,
                                         a.dump_path.empty() ? nullptr
                                                             : &final_set);

    if (!a.dump_path.empty()) {
        DumpMeta meta;
        meta.k = a.k;
        meta.s = rep.rounds.empty() ? 0 : rep.rounds.back().s;
        std::ofstream out(a.dump_path, std::ios::binary);
        if (!out)
            throw IoError("cannot open '" + a.dump_path + "' for writing");
        serialize_reach(final_set, meta, out);
    }

    if (!a.json_path.empty())
        write_output(a.json_path, sieve_report_json(rep, a.stable));
    if (!a.csv_path.empty())
        write_output(a.csv_path, sieve_report_csv(rep));
    if (a.json_path.empty() && a.csv_path.empty()) {
        std::string text = sieve_report_text(rep);
        if (!a.count) {
            // keep only the header and verdict lines
            std::string filtered;
            std::size_t pos = 0;
            while (pos < text.size()) {
                const std::size_t nl = text.find('\n', pos);
                const std::string line = text.substr(pos, nl - pos);
                if (line.rfind("  s = ", 0) != 0)
                    filtered += line + "\n";
                pos = nl == std::string::npos ? text.size() : nl + 1;
            }
            text = filtered;
        }
        std::cout << text;
    }
    return rep.g ? 0 : 1;
}

struct RecurArgs {
    unsigned k = 0;
    std::string params_path;
    bool optimize = false;
    bool continue_fixture = false;
    unsigned to_s = 0; // 0: default 2k+4
    double grid = 1e-3;
    std::string json_path, csv_path;
};

int run_recur(const RecurArgs& a) {
    if (a.optimize == !a.params_path.empty())
        throw ArgumentError("recur needs exactly one of --params or "
                            "--optimize");
    if (a.continue_fixture && !a.optimize)
        throw ArgumentError("--continue-fixture requires --optimize");
    if (a.k < 3)
        throw ArgumentError("recur needs --k of at least 3");

    RecurReport rep;
    rep.k = a.k;
    const unsigned to_s = a.to_s ? a.to_s : 2 * a.k + 4;

    if (!a.params_path.empty()) {
        auto rows = parse_params_csv(read_input(a.params_path));
        std::vector<StepParams> schedule;
        unsigned expect = 3;
        for (const ParamRow& r : rows) {
            if (r.k != a.k)
                continue;
            if (r.s != expect)
                throw FormatError("params for k = " + std::to_string(a.k) +
                                  " must run contiguously from s = 3; "
                                  "expected s = " + std::to_string(expect) +
                                  ", got s = " + std::to_string(r.s));
            schedule.push_back(r.params);
            ++expect;
        }
        if (schedule.empty())
            throw ArgumentError("no parameter rows for k = " +
                                std::to_string(a.k) + " in '" +
                                a.params_path + "'");
        const ChainResult chain = run_chain(a.k, schedule);
        for (const ChainStep& st : chain.steps)
            rep.rows.push_back(
                {st.s, st.params, st.theta, st.state.delta});
    } else {
        RecState state = chain_start(a.k);
        if (a.continue_fixture) {
            for (const fixtures::Row& row : fixtures::recursion_rows_for(a.k)) {
                const ThetaProfile prof =
                    theta_profile(a.k, row.s, row.params, state.lambda);
                const double delta =
                    delta_step(state.delta, prof.theta[0], row.params.alpha,
                               row.params.tau, a.k);
                state = make_rec_state(a.k, row.s, delta);
                rep.rows.push_back({row.s, row.params, prof.theta[0], delta});
            }
        }
        SearchConfig cfg;
        cfg.resolution = a.grid;
        for (unsigned s = state.s + 1; s <= to_s; ++s) {
            if (state.delta <= 1e-6)
                break;
            const StepResult res = optimize_step(a.k, s, state.delta, cfg);
            state = make_rec_state(a.k, s, res.delta);
            rep.rows.push_back({s, res.params, res.theta, res.delta});
        }
    }

    if (!a.json_path.empty())
        write_output(a.json_path, recur_report_json(rep));
    if (!a.csv_path.empty())
        write_output(a.csv_path, recur_report_csv(rep));
    if (a.json_path.empty() && a.csv_path.empty())
        std::cout << recur_report_text(rep);
    return 0;
}

struct ReplayArgs {
    std::string k = "all";
    double theta_tol = 1e-4;
    double delta_tol = 1e-3;
    bool chained = false;
    std::string json_path;
};

int run_replay(const ReplayArgs& a) {
    std::vector<RecursionRow> rows;
    if (a.k == "all") {
        const auto all = fixtures::recursion_rows();
        rows.assign(all.begin(), all.end());
    } else {
        const auto k = static_cast<unsigned>(
            parse_uint_field(a.k, "--k"));
        const auto span = fixtures::recursion_rows_for(k);
        if (span.empty())
            throw ArgumentError("no fixture rows for k = " + a.k);
        rows.assign(span.begin(), span.end());
    }
    const ReplayReport rep =
        replay_table(rows, a.theta_tol, a.delta_tol, a.chained);
    if (!a.json_path.empty()) {
        nlohmann::json j;
        j["chained"] = rep.chained;
        j["theta_tol"] = rep.theta_tol;
        j["delta_tol"] = rep.delta_tol;
        j["groups"] = nlohmann::json::array();
        for (const GroupDeviation& g : rep.groups)
            j["groups"].push_back({{"k", g.k},
                                   {"rows", g.rows},
                                   {"max_theta_dev", g.max_theta_dev},
                                   {"max_delta_dev", g.max_delta_dev},
                                   {"final_delta", g.final_delta_computed}});
        j["violations"] = nlohmann::json::array();
        for (const RowDeviation& v : rep.violations)
            j["violations"].push_back({{"k", v.k},
                                       {"s", v.s},
                                       {"theta_dev", v.theta_dev},
                                       {"delta_dev", v.delta_dev}});
        write_output(a.json_path, j.dump(2) + "\n");
    } else {
        std::cout << replay_report_text(rep);
    }
    return rep.ok() ? 0 : 1;
}

struct BoundArgs {
    unsigned k = 0;
    std::string table_path;
    std::string json_path;
};

int run_bound(const BoundArgs& a) {
    DeltaTable table;
    if (!a.table_path.empty()) {
        table = parse_delta_table(read_input(a.table_path));
        if (table.k != a.k)
            throw ArgumentError("--delta-table holds k = " +
                                std::to_string(table.k) + ", not k = " +
                                std::to_string(a.k));
    } else {
        const auto rows = fixtures::recursion_rows_for(a.k);
        if (rows.empty())
            throw ArgumentError("no stored delta table for k = " +
                                std::to_string(a.k) +
                                "; pass --delta-table");
        table.k = a.k;
        for (const fixtures::Row& r : rows)
            table.delta[r.s] = r.delta;
        // Stored runs for some k stop before the endpoint; the endpoint
        // delta is tabulated separately and completes the table.
        for (const fixtures::FinalDelta& f : fixtures::final_deltas())
            if (f.k == a.k)
                table.delta[f.s] = f.delta;
    }

    const auto [s_min, cert] = best_bound(table);
    if (!a.json_path.empty()) {
        nlohmann::json j;
        j["k"] = cert.k;
        j["s"] = cert.s;
        j["t"] = cert.t;
        j["v"] = cert.v;
        j["delta_t"] = cert.delta_t;
        j["zeta_k"] = cert.zeta_k;
        j["valid"] = cert.valid();
        write_output(a.json_path, j.dump(2) + "\n");
    } else {
        std::cout << "k = " << cert.k << ": bound s = " << s_min << " (t = "
                  << cert.t << ", v = " << cert.v << ", delta(t) = "
                  << shortest_double(cert.delta_t) << ", threshold "
                  << shortest_double(cert.zeta_k) << ")\n";
    }
    return cert.valid() ? 0 : 1;
}

int run_asym(unsigned k, const std::string& json_path) {
    const AsymptoticReport rep = asymptotic_bound(k);
    if (!json_path.empty()) {
        nlohmann::json j;
        j["k"] = rep.k;
        j["power_of_two"] = rep.power_of_two;
        j["descent_steps"] = rep.descent_steps;
        j["recursion_steps"] = rep.recursion_steps;
        j["u"] = rep.u;
        j["u_per_k"] = rep.u_per_k;
        j["g_bound"] = rep.g_bound;
        j["g_bound_per_k"] = rep.g_bound_per_k;
        write_output(json_path, j.dump(2) + "\n");
    } else {
        std::cout << "k = " << rep.k
                  << (rep.power_of_two ? " (power of two)\n" : "\n")
                  << "  descent steps:   " << shortest_double(rep.descent_steps)
                  << "\n  recursion steps: "
                  << shortest_double(rep.recursion_steps) << "\n  u = "
                  << shortest_double(rep.u) << " ("
                  << shortest_double(rep.u_per_k) << " per k)\n  bound "
                  << shortest_double(rep.g_bound) << " ("
                  << shortest_double(rep.g_bound_per_k) << " per k)\n";
    }
    return 0;
}

struct BenchArgs {
    unsigned k = 0;
    std::uint64_t hi = 0;
    unsigned rounds = 3;
    std::size_t block_words = default_block_words;
    std::string regression_path = "bench_best.json";
    bool allow_large = false;
};

int run_bench(const BenchArgs& a) {
    const std::uint64_t need = sieve_memory_estimate(a.hi);
    if (need > large_run_bytes && !a.allow_large)
        throw ArgumentError(
            "estimated working set " + std::to_string(need) +
            " bytes exceeds " + std::to_string(large_run_bytes) +
            "; pass --allow-large to acknowledge the allocation");

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const PowerTable table = build_power_table(a.k, a.hi);

    nlohmann::json best = nlohmann::json::object();
    {
        std::ifstream in(a.regression_path);
        if (in) {
            try {
                in >> best;
            } catch (const nlohmann::json::exception&) {
                best = nlohmann::json::object();
            }
        }
    }

    const std::vector<unsigned> thread_counts =
        hw > 1 ? std::vector<unsigned>{1, hw} : std::vector<unsigned>{1};
    for (const unsigned threads : thread_counts) {
        ReachSet cur = init_reach(table, a.hi);
        ReachSet next(a.hi);
        const RoundOptions opt{threads, a.block_words};
        const std::uint64_t bytes_per_round = cur.word_count() * 8;
        double best_rate = 0.0;
        for (unsigned r = 0; r < a.rounds; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            advance_round_into(cur, table, next, opt);
            const std::chrono::duration<double> dt =
                std::chrono::steady_clock::now() - t0;
            std::swap(cur, next);
            const double rate =
                static_cast<double>(bytes_per_round) /
                std::max(dt.count(), 1e-9);
            best_rate = std::max(best_rate, rate);
            std::cout << "threads " << threads << " round " << (r + 1)
                      << ": " << shortest_double(rate / 1e6)
                      << " MB/s of destination written\n";
        }
        const std::string key = "k" + std::to_string(a.k) + "_hi" +
                                std::to_string(a.hi) + "_t" +
                                std::to_string(threads);
        const double prev = best.value(key, 0.0);
        if (best_rate > prev) {
            best[key] = best_rate;
            std::cout << "new best for " << key << ": "
                      << shortest_double(best_rate / 1e6) << " MB/s\n";
        } else {
            std::cout << "best for " << key << " stays "
                      << shortest_double(prev / 1e6) << " MB/s\n";
        }
    }
    write_output(a.regression_path, best.dump(2) + "\n");
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"sums of k-th powers: sieve, exponent recursion, and "
                 "bound assembly"};
    app.require_subcommand(1);

    SieveArgs sv;
    auto* sieve_cmd = app.add_subcommand(
        "sieve", "compute G(k; [lo, hi]) by bit-parallel rounds");
    sieve_cmd->add_option("--k", sv.k, "power exponent")->required();
    sieve_cmd->add_option("--lo", sv.lo, "interval lower end (>= 1)")
        ->required();
    sieve_cmd->add_option("--hi", sv.hi, "interval upper end")->required();
    sieve_cmd->add_option("--s-max", sv.s_max, "round cap (default 64)");
    sieve_cmd->add_option("--threads", sv.threads, "worker threads");
    sieve_cmd->add_option("--block-words", sv.block_words,
                          "destination block size in words");
    sieve_cmd
        ->add_option("--mem-cap", sv.mem_cap,
                     "memory cap in bytes (overrides WARING_MEM_CAP)")
        ->each([&sv](const std::string&) { sv.mem_cap_set = true; });
    sieve_cmd->add_flag("--allow-large", sv.allow_large,
                        "acknowledge runs past 256 MiB of working set");
    sieve_cmd->add_flag("--stable", sv.stable,
                        "zero timings for byte-identical reruns");
    sieve_cmd->add_flag("--count", sv.count,
                        "print per-round missing counts in text output");
    sieve_cmd->add_option("--json", sv.json_path,
                          "write the JSON report here ('-' for stdout)");
    sieve_cmd->add_option("--csv", sv.csv_path,
                          "write per-round counts as CSV here");
    sieve_cmd->add_option("--dump", sv.dump_path,
                          "serialize the final reach set here");

    RecurArgs rc;
    auto* recur_cmd = app.add_subcommand(
        "recur", "run the delta recursion from s = 3");
    recur_cmd->add_option("--k", rc.k, "power exponent")->required();
    recur_cmd->add_option("--params", rc.params_path,
                          "CSV schedule k,s,alpha,tau,mu,sigma");
    recur_cmd->add_flag("--optimize", rc.optimize,
                        "search parameters per step instead");
    recur_cmd->add_flag("--continue-fixture", rc.continue_fixture,
                        "replay the stored rows first, then optimize on");
    recur_cmd->add_option("--to-s", rc.to_s,
                          "last step index (default 2k + 4)");
    recur_cmd->add_option("--grid", rc.grid,
                          "search resolution (default 1e-3)");
    recur_cmd->add_option("--json", rc.json_path, "write JSON report here");
    recur_cmd->add_option("--csv", rc.csv_path, "write CSV report here");

    ReplayArgs rp;
    auto* replay_cmd = app.add_subcommand(
        "replay", "recompute the stored recursion rows and report drift");
    replay_cmd->add_option("--k", rp.k, "one k, or 'all'");
    replay_cmd->add_option("--theta-tol", rp.theta_tol,
                           "theta tolerance (default 1e-4)");
    replay_cmd->add_option("--delta-tol", rp.delta_tol,
                           "delta tolerance (default 1e-3)");
    replay_cmd->add_flag("--chained", rp.chained,
                         "carry recomputed deltas forward");
    replay_cmd->add_option("--json", rp.json_path, "write JSON report here");

    BoundArgs bd;
    auto* bound_cmd = app.add_subcommand(
        "bound", "assemble the best certified bound from a delta table");
    bound_cmd->add_option("--k", bd.k, "power exponent")->required();
    bound_cmd->add_option("--delta-table", bd.table_path,
                          "k,s,delta CSV or recur JSON (default: stored "
                          "table)");
    bound_cmd->add_option("--json", bd.json_path, "write JSON report here");

    unsigned asym_k = 0;
    std::string asym_json;
    auto* asym_cmd = app.add_subcommand(
        "asym", "large-k step counts and the resulting bound");
    asym_cmd->add_option("--k", asym_k, "power exponent")->required();
    asym_cmd->add_option("--json", asym_json, "write JSON report here");

    BenchArgs bn;
    auto* bench_cmd = app.add_subcommand(
        "bench", "time the shifted-OR kernel and track the best rate");
    bench_cmd->add_option("--k", bn.k, "power exponent")->required();
    bench_cmd->add_option("--hi", bn.hi, "range upper end")->required();
    bench_cmd->add_option("--rounds", bn.rounds, "rounds to time (default 3)");
    bench_cmd->add_option("--block-words", bn.block_words,
                          "destination block size in words");
    bench_cmd->add_option("--regression", bn.regression_path,
                          "best-rate record file (default bench_best.json)");
    bench_cmd->add_flag("--allow-large", bn.allow_large,
                        "acknowledge runs past 256 MiB of working set");

    std::string table_name;
    std::string table_out = "-";
    auto* tables_cmd = app.add_subcommand(
        "tables", "export a stored reference table as CSV");
    tables_cmd->add_option("--name", table_name,
                           "table name (default: list the names)");
    tables_cmd->add_option("--out", table_out,
                           "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (sieve_cmd->parsed())
        return run_sieve(sv);
    if (recur_cmd->parsed())
        return run_recur(rc);
    if (replay_cmd->parsed())
        return run_replay(rp);
    if (bound_cmd->parsed())
        return run_bound(bd);
    if (asym_cmd->parsed())
        return run_asym(asym_k, asym_json);
    if (bench_cmd->parsed())
        return run_bench(bn);
    if (tables_cmd->parsed()) {
        if (table_name.empty()) {
            for (const std::string& n : fixtures::table_names())
                std::cout << n << "\n";
            return 0;
        }
        write_output(table_out, fixtures::table_csv(table_name));
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        // argument, singular-parameter, format, and fixture problems
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
