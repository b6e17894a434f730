// rectcover: generate random rectangle instances, run the clique-cover and
// independent-set heuristics, verify them against exact oracles, and
// benchmark them.
//
// Exit status: 0 success, 1 verification failure, 2 usage or IO error.

#include "rectcover/bench.hpp"
#include "rectcover/instance_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rectcover;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;

Region parse_region(std::string const& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double const d = std::stod(tok, &used);
        if (used != tok.size()) {
            throw BenchConfigError("bad region '" + text + "'");
        }
        v.push_back(d);
    }
    if (v.size() != 4) {
        throw BenchConfigError("region must be x_min,x_max,y_min,y_max");
    }
    Region r{v[0], v[1], v[2], v[3]};
    validate_region(r);
    return r;
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void emit(std::string const& path, Fn&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write(out);
    if (!out.flush()) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

struct Options {
    std::size_t n = 0;
    std::vector<std::size_t> n_list;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::string region = "0,1,0,1";
    std::vector<std::string> algos;
    std::string format = "json";
    std::string out;
    std::string in;
    bool allow_large = false;
    bool timings = false;
    std::string records;
    std::string gnuplot;
    std::size_t threads = 0;
    std::size_t count = 100;
    bool inject_invalid_cover = false;
};

int cmd_gen(Options const& o) {
    Instance const inst = generate_instance(o.n, parse_region(o.region), o.seed);
    emit(o.out, [&](std::ostream& s) { write_instance(s, inst); });
    return exit_ok;
}

int cmd_solve(Options const& o, bool generated, bool seed_given) {
    Instance inst;
    if (!o.in.empty()) {
        inst = load_instance(o.in);
        inst.seed = seed_given ? o.seed : 0;
    } else if (generated) {
        inst = generate_instance(o.n, parse_region(o.region), o.seed);
    } else {
        throw CLI::ValidationError("solve", "give an instance file or --n");
    }
    if (o.algos.size() != 1) {
        throw CLI::ValidationError("--algo", "solve takes exactly one algorithm");
    }
    Algorithm algo{};
    if (!parse_algorithm(o.algos[0], algo)) {
        throw CLI::ValidationError("--algo", "unknown algorithm '" + o.algos[0] + "'");
    }
    SolveReport const rep = solve(inst, algo);
    emit(o.out, [&](std::ostream& s) {
        if (o.format == "csv") {
            write_solve_csv(s, rep);
        } else {
            s << to_json(rep).dump(2) << '\n';
        }
    });
    return rep.verified ? exit_ok : exit_verify;
}

int cmd_bench(Options const& o) {
    BenchConfig cfg;
    if (!o.n_list.empty()) {
        cfg.n_list = o.n_list;
    }
    cfg.trials = o.trials;
    cfg.base_seed = o.seed;
    cfg.region = parse_region(o.region);
    cfg.allow_large = o.allow_large;
    cfg.threads = o.threads;
    if (!o.algos.empty()) {
        cfg.algos.clear();
        for (std::string const& name : o.algos) {
            Algorithm a{};
            if (!parse_algorithm(name, a)) {
                throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
            }
            cfg.algos.push_back(a);
        }
    }
    validate(cfg);
    for (std::size_t n : cfg.n_list) {
        if (n > default_max_n) {
            std::cerr << "warning: n = " << n
                      << " is beyond desk scale; simplicial-based algorithms are cubic "
                         "in the worst case\n";
        }
        if (n > cfg.simplicial_cap) {
            std::cerr << "warning: n = " << n << " exceeds " << cfg.simplicial_cap
                      << "; only gcc runs at this size\n";
        }
    }

    std::vector<RunRecord> records;
    std::vector<BenchRow> rows;
    try {
        rows = run_bench(cfg, o.records.empty() ? nullptr : &records);
    } catch (BenchVerificationError const& e) {
        std::cerr << "bench aborted: " << e.what() << '\n';
        return exit_verify;
    }
    emit(o.out, [&](std::ostream& s) { write_bench_csv(s, rows, o.timings); });
    if (!o.records.empty()) {
        emit(o.records, [&](std::ostream& s) { write_run_records_csv(s, records); });
    }
    if (!o.gnuplot.empty()) {
        std::string const csv = o.out.empty() || o.out == "-" ? "bench.csv" : o.out;
        emit(o.gnuplot, [&](std::ostream& s) { write_gnuplot_script(s, csv); });
    }
    return exit_ok;
}

int cmd_verify(Options const& o) {
    VerifyConfig cfg;
    cfg.count = o.count;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.inject_invalid_cover = o.inject_invalid_cover;
    VerifyReport const rep = run_verify(cfg);
    for (VerifyFailure const& f : rep.failures) {
        std::cout << "FAIL " << f.check << " seed=" << f.seed << " n=" << f.n
                  << " (reproduce: rectcover gen --n " << f.n << " --seed " << f.seed
                  << ")\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.instances
              << " instances, " << rep.checks << " checks, " << rep.failures.size()
              << " violations\n";
    return rep.passed() ? exit_ok : exit_verify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy clique cover and independent set on random rectangles"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Write a random instance");
    gen->add_option("--n", o.n, "Number of rectangles")->required();
    gen->add_option("--seed", o.seed, "Generator seed");
    gen->add_option("--region", o.region, "x_min,x_max,y_min,y_max");
    gen->add_option("--out", o.out, "Output path (stdout if omitted)");

    auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance");
    solve_cmd->add_option("instance", o.in, "Instance file");
    auto* solve_n = solve_cmd->add_option("--n", o.n, "Generate an instance of this size instead");
    auto* solve_seed =
        solve_cmd->add_option("--seed", o.seed, "Seed recorded in the result (and used with --n)");
    solve_cmd->add_option("--region", o.region, "x_min,x_max,y_min,y_max (with --n)");
    solve_cmd->add_option("--algo", o.algos, "gcc | gcc-i | mis | mis-i")->required();
    solve_cmd->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--out", o.out, "Output path (stdout if omitted)");

    auto* bench = app.add_subcommand("bench", "Table of mean result sizes per n");
    bench->add_option("--n-list", o.n_list, "Sizes, e.g. 500,1000,5000")->delimiter(',');
    bench->add_option("--trials", o.trials, "Instances per size");
    bench->add_option("--seed", o.seed, "Base seed");
    bench->add_option("--region", o.region, "x_min,x_max,y_min,y_max");
    bench->add_option("--algo", o.algos, "Subset of gcc,gcc-i,mis,mis-i")->delimiter(',');
    bench->add_option("--out", o.out, "CSV path (stdout if omitted)");
    bench->add_flag("--allow-large", o.allow_large, "Permit n above 5000");
    bench->add_flag("--timings", o.timings, "Fill the per-algorithm timing columns");
    bench->add_option("--records", o.records, "Per-run CSV sidecar path");
    bench->add_option("--gnuplot", o.gnuplot, "Also write a gnuplot script here");
    bench->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "Check heuristics against exact oracles");
    verify->add_option("--count", o.count, "Number of random instances");
    verify->add_option("--n", o.n, "Rectangles per instance")->required();
    verify->add_option("--seed", o.seed, "Base seed");
    verify->add_flag("--inject-invalid-cover", o.inject_invalid_cover)
        ->group(""); // test hook

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(o);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(o, solve_n->count() > 0, solve_seed->count() > 0);
        }
        if (bench->parsed()) {
            return cmd_bench(o);
        }
        return cmd_verify(o);
    } catch (CLI::Error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
