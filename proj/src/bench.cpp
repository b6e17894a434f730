#include "rectcover/bench.hpp"

#include "rectcover/clique_engine.hpp"
#include "rectcover/instance_io.hpp"
#include "rectcover/intersection_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace rectcover {

namespace {

double to_ms(std::chrono::nanoseconds d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string opt6(std::optional<double> const& v) {
    return v ? fixed6(*v) : std::string();
}

} // namespace

// ---- solve ---------------------------------------------------------------

SolveReport solve(Instance const& instance, Algorithm algo) {
    SolveReport r;
    r.algo = algo;
    r.n = instance.rects.size();
    r.seed = instance.seed;

    if (is_cover_algorithm(algo)) {
        CoverResult const cover =
            algo == Algorithm::gcc ? gcc(instance) : gcc_i(instance);
        r.size = cover.points.size();
        r.points = cover.points;
        r.theta = cover.theta_count;
        r.phi = cover.phi_count;
        r.elapsed_ms = to_ms(cover.elapsed);
        r.verified = verify_cover(instance.rects, cover.points) &&
                     verify_cover_assignment(instance.rects, cover.points,
                                             cover.assignment) &&
                     cover.theta_count + cover.phi_count == cover.points.size();
    } else {
        IndependentSetResult const mis =
            algo == Algorithm::mis ? mis_greedy(instance) : mis_i(instance);
        r.size = mis.members.size();
        r.members = mis.members;
        r.elapsed_ms = to_ms(mis.elapsed);
        r.verified = verify_independent(instance.rects, mis.members);
    }
    return r;
}

nlohmann::json to_json(SolveReport const& report) {
    nlohmann::json j;
    j["algo"] = std::string(algorithm_name(report.algo));
    j["n"] = report.n;
    j["seed"] = report.seed;
    j["size"] = report.size;
    if (is_cover_algorithm(report.algo)) {
        auto pts = nlohmann::json::array();
        for (Point p : report.points) {
            pts.push_back({p.x, p.y});
        }
        j["points"] = std::move(pts);
    } else {
        j["members"] = report.members;
    }
    j["theta"] = report.theta;
    j["phi"] = report.phi;
    j["elapsed_ms"] = report.elapsed_ms;
    j["verified"] = report.verified;
    return j;
}

void write_solve_csv(std::ostream& out, SolveReport const& report) {
    out << "algo,n,seed,size,theta,phi,elapsed_ms,verified,witness\n";
    out << algorithm_name(report.algo) << ',' << report.n << ',' << report.seed
        << ',' << report.size << ',' << report.theta << ',' << report.phi << ','
        << fixed6(report.elapsed_ms) << ',' << (report.verified ? "true" : "false")
        << ',';
    bool first = true;
    auto sep = [&] {
        if (!first) {
            out << ';';
        }
        first = false;
    };
    for (Point p : report.points) {
        sep();
        out << format_double(p.x) << ':' << format_double(p.y);
    }
    for (std::size_t m : report.members) {
        sep();
        out << m;
    }
    out << '\n';
}

// ---- bench ---------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t t) {
    std::uint64_t z = splitmix64(base_seed);
    z = splitmix64(z ^ static_cast<std::uint64_t>(n));
    return splitmix64(z ^ static_cast<std::uint64_t>(t));
}

void validate(BenchConfig const& config) {
    if (config.trials == 0) {
        throw BenchConfigError("trials must be at least 1");
    }
    if (config.n_list.empty()) {
        throw BenchConfigError("n-list is empty");
    }
    try {
        validate_region(config.region);
    } catch (GeometryError const& e) {
        throw BenchConfigError(e.what());
    }
    for (std::size_t n : config.n_list) {
        if (n > default_max_n && !config.allow_large) {
            throw BenchConfigError("n = " + std::to_string(n) + " exceeds " +
                                   std::to_string(default_max_n) +
                                   "; pass --allow-large to run it");
        }
    }
}

std::vector<Algorithm> algorithms_for(BenchConfig const& config, std::size_t n) {
    std::vector<Algorithm> out;
    for (Algorithm a : all_algorithms) {
        bool const wanted =
            std::find(config.algos.begin(), config.algos.end(), a) != config.algos.end();
        bool const simplicial = a != Algorithm::gcc;
        if (wanted && !(simplicial && n > config.simplicial_cap)) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<BenchRow> run_bench(BenchConfig const& config,
                                std::vector<RunRecord>* records) {
    validate(config);

    struct Task {
        std::size_t n;
        std::size_t t;
    };
    std::vector<Task> tasks;
    for (std::size_t n : config.n_list) {
        for (std::size_t t = 0; t < config.trials; ++t) {
            tasks.push_back({n, t});
        }
    }
    std::vector<std::vector<RunRecord>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                auto const [n, t] = tasks[i];
                std::uint64_t const seed = trial_seed(config.base_seed, n, t);
                Instance const inst = generate_instance(n, config.region, seed);
                for (Algorithm a : algorithms_for(config, n)) {
                    SolveReport const rep = solve(inst, a);
                    results[i].push_back({seed, n, a, rep.size, rep.theta, rep.phi,
                                          rep.elapsed_ms, rep.verified});
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    std::size_t threads = config.threads != 0
                              ? config.threads
                              : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, tasks.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        for (RunRecord const& rec : results[i]) {
            if (!rec.verified) {
                throw BenchVerificationError(
                    "unverified " + std::string(algorithm_name(rec.algo)) +
                    " result for seed=" + std::to_string(rec.seed) +
                    " n=" + std::to_string(rec.n));
            }
        }
    }

    std::vector<BenchRow> rows;
    std::size_t task = 0;
    for (std::size_t n : config.n_list) {
        BenchRow row;
        row.n = n;
        row.trials = config.trials;
        row.two_sqrt_n = 2.0 * std::sqrt(static_cast<double>(n));
        row.three_sqrt_n = 3.0 * std::sqrt(static_cast<double>(n));

        double size_sum[4] = {};
        double ms_sum[4] = {};
        std::size_t runs[4] = {};
        for (std::size_t t = 0; t < config.trials; ++t, ++task) {
            for (RunRecord const& rec : results[task]) {
                auto const k = static_cast<std::size_t>(rec.algo);
                size_sum[k] += static_cast<double>(rec.size);
                ms_sum[k] += rec.elapsed_ms;
                ++runs[k];
                if (records != nullptr) {
                    records->push_back(rec);
                }
            }
        }
        auto mean = [&](Algorithm a, double const* sums) -> std::optional<double> {
            auto const k = static_cast<std::size_t>(a);
            if (runs[k] == 0) {
                return std::nullopt;
            }
            return sums[k] / static_cast<double>(runs[k]);
        };
        row.mean_gcc = mean(Algorithm::gcc, size_sum);
        row.mean_gcc_i = mean(Algorithm::gcc_i, size_sum);
        row.mean_mis = mean(Algorithm::mis, size_sum);
        row.mean_mis_i = mean(Algorithm::mis_i, size_sum);
        row.ms_gcc = mean(Algorithm::gcc, ms_sum);
        row.ms_gcc_i = mean(Algorithm::gcc_i, ms_sum);
        row.ms_mis = mean(Algorithm::mis, ms_sum);
        row.ms_mis_i = mean(Algorithm::mis_i, ms_sum);
        if (row.mean_gcc_i && row.mean_mis && *row.mean_mis > 0.0) {
            row.ratio_gcc_i_over_mis = *row.mean_gcc_i / *row.mean_mis;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_bench_csv(std::ostream& out, std::vector<BenchRow> const& rows,
                     bool with_timings) {
    out << "n,trials,gcc,gcc_i,mis,mis_i,ratio_gcci_mis,two_sqrt_n,three_sqrt_n,"
           "external_baseline,gcc_ms,gcc_i_ms,mis_ms,mis_i_ms\n";
    for (BenchRow const& r : rows) {
        out << r.n << ',' << r.trials << ',' << opt6(r.mean_gcc) << ','
            << opt6(r.mean_gcc_i) << ',' << opt6(r.mean_mis) << ','
            << opt6(r.mean_mis_i) << ',' << opt6(r.ratio_gcc_i_over_mis) << ','
            << fixed6(r.two_sqrt_n) << ',' << fixed6(r.three_sqrt_n) << ",,";
        if (with_timings) {
            out << opt6(r.ms_gcc) << ',' << opt6(r.ms_gcc_i) << ','
                << opt6(r.ms_mis) << ',' << opt6(r.ms_mis_i);
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

void write_run_records_csv(std::ostream& out, std::vector<RunRecord> const& records) {
    out << "seed,n,algo,size,theta,phi,elapsed_ms,verified\n";
    for (RunRecord const& r : records) {
        out << r.seed << ',' << r.n << ',' << algorithm_name(r.algo) << ','
            << r.size << ',' << r.theta << ',' << r.phi << ','
            << fixed6(r.elapsed_ms) << ',' << (r.verified ? "true" : "false") << '\n';
    }
}

void write_gnuplot_script(std::ostream& out, std::string const& csv_path) {
    out << "set datafile separator ','\n"
           "set key autotitle columnhead left top\n"
           "set xlabel 'n'\n"
           "set terminal pngcairo size 900,600\n"
           "set output 'clique_cover.png'\n"
           "set ylabel 'clique cover size'\n"
           "plot '" << csv_path << "' using 1:3 with linespoints title 'GCC', \\\n"
           "     '' using 1:4 with linespoints title 'GCC_I', \\\n"
           "     '' using 1:9 with lines title '3 sqrt(n)'\n"
           "set output 'independent_set.png'\n"
           "set ylabel 'independent set size'\n"
           "plot '" << csv_path << "' using 1:5 with linespoints title 'MIS', \\\n"
           "     '' using 1:6 with linespoints title 'MIS_I', \\\n"
           "     '' using 1:8 with lines title '2 sqrt(n)'\n"
           "set output 'ratio.png'\n"
           "set ylabel 'GCC_I / MIS'\n"
           "plot '" << csv_path << "' using 1:7 with linespoints title 'GCC_I/MIS'\n";
}

// ---- verify --------------------------------------------------------------

VerifyReport run_verify(VerifyConfig const& config) {
    std::size_t const cap = std::min(config.limits.mis_cap, config.limits.mcc_cap);
    if (config.n > cap) {
        throw OracleCapExceeded("verify: n = " + std::to_string(config.n) +
                                " exceeds oracle cap " + std::to_string(cap));
    }

    VerifyReport report;
    for (std::size_t i = 0; i < config.count; ++i) {
        std::uint64_t const seed = trial_seed(config.seed, config.n, i);
        Instance const inst = generate_instance(config.n, unit_square, seed);
        auto expect = [&](bool ok, char const* check) {
            ++report.checks;
            if (!ok) {
                report.failures.push_back({seed, config.n, check});
            }
        };

        if (!inst.rects.empty()) {
            expect(max_clique_sweep(inst.rects).members.size() ==
                       max_clique_candidates(inst.rects).members.size(),
                   "sweep clique size equals candidate-point maximum");
        }

        IntersectionGraph const g = build_graph(inst.rects);
        VertexSet const scan = simplicial_scan(g);
        auto const w = find_simplicial(g, inst.rects);
        expect(w.has_value() == !scan.empty(),
               "find_simplicial finds a vertex iff one exists");
        if (w) {
            bool const in_scan = std::binary_search(scan.begin(), scan.end(), w->vertex);
            bool const stabbed = std::all_of(
                w->neighborhood.begin(), w->neighborhood.end(),
                [&](Vertex v) { return strictly_inside(w->stab, inst.rects[v]); });
            expect(in_scan && stabbed, "simplicial witness is valid");
        }

        SolveReport const r_gcc = solve(inst, Algorithm::gcc);
        SolveReport const r_gcc_i = solve(inst, Algorithm::gcc_i);
        SolveReport const r_mis = solve(inst, Algorithm::mis);
        SolveReport const r_mis_i = solve(inst, Algorithm::mis_i);

        bool gcc_valid = r_gcc.verified;
        if (config.inject_invalid_cover && i == 0) {
            // Drop every stab point; any non-empty instance is then uncovered.
            gcc_valid = verify_cover(inst.rects, std::span<Point const>{});
        }
        expect(gcc_valid, "gcc cover is valid");
        expect(r_gcc_i.verified, "gcc-i cover is valid");
        expect(r_mis.verified, "mis set is independent");
        expect(r_mis_i.verified, "mis-i set is independent");

        ExactMis const emis = exact_mis(g, config.limits);
        ExactMcc const emcc = exact_mcc(inst.rects, config.limits);
        std::vector<std::size_t> emis_rects;
        for (Vertex v : emis.members) {
            emis_rects.push_back(g.rect_index(v));
        }
        expect(verify_independent(inst.rects, emis_rects), "exact MIS witness is independent");
        expect(verify_cover(inst.rects, emcc.points), "exact MCC witness is a cover");

        expect(r_mis.size <= emis.size, "mis <= exact MIS");
        expect(r_mis_i.size <= emis.size, "mis-i <= exact MIS");
        expect(emis.size <= emcc.size, "exact MIS <= exact MCC");
        expect(emcc.size <= r_gcc_i.size, "exact MCC <= gcc-i");
        expect(emcc.size <= r_gcc.size, "exact MCC <= gcc");
        ++report.instances;
    }
    return report;
}

} // namespace rectcover
