#ifndef RECTCOVER_BENCH_HPP
#define RECTCOVER_BENCH_HPP

#include "rectcover/exact_oracles.hpp"
#include "rectcover/geometry.hpp"
#include "rectcover/heuristics.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectcover {

// ---- solve ---------------------------------------------------------------

struct SolveReport {
    Algorithm algo = Algorithm::gcc;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t size = 0;
    std::vector<Point> points;        // cover algorithms
    std::vector<std::size_t> members; // independent-set algorithms
    std::size_t theta = 0;
    std::size_t phi = 0;
    double elapsed_ms = 0.0;
    bool verified = false;
};

// Runs one algorithm and checks its output with the exact-oracle verifiers:
// covers must stab every instance rectangle (dominated ones included),
// independent sets must be pairwise interior-disjoint.
SolveReport solve(Instance const& instance, Algorithm algo);

// {algo, n, seed, size, points|members, theta, phi, elapsed_ms, verified}
nlohmann::json to_json(SolveReport const& report);

// Header plus one row; the witness column holds "x:y" points or member
// indices separated by ';'.
void write_solve_csv(std::ostream& out, SolveReport const& report);

// ---- bench ---------------------------------------------------------------

inline constexpr std::size_t default_max_n = 5000;
inline constexpr std::size_t default_simplicial_cap = 20000;

struct BenchConfig {
    std::vector<std::size_t> n_list{500, 1000, 5000};
    std::size_t trials = 20;
    std::uint64_t base_seed = 1;
    std::vector<Algorithm> algos{std::begin(all_algorithms), std::end(all_algorithms)};
    Region region = unit_square;
    bool allow_large = false;
    // Simplicial-based algorithms are skipped above this n.
    std::size_t simplicial_cap = default_simplicial_cap;
    // Worker threads for independent trials; 0 picks hardware concurrency.
    std::size_t threads = 0;
};

class BenchConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BenchVerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunRecord {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    Algorithm algo = Algorithm::gcc;
    std::size_t size = 0;
    std::size_t theta = 0;
    std::size_t phi = 0;
    double elapsed_ms = 0.0;
    bool verified = false;
};

// Means over verified runs; absent when the algorithm did not run at this n.
struct BenchRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::optional<double> mean_gcc, mean_gcc_i, mean_mis, mean_mis_i;
    std::optional<double> ratio_gcc_i_over_mis;
    double two_sqrt_n = 0.0;
    double three_sqrt_n = 0.0;
    std::optional<double> ms_gcc, ms_gcc_i, ms_mis, ms_mis_i;
};

// Seed of trial t at size n; a pure function so partial reruns reproduce.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t t);

// Throws BenchConfigError for trials == 0, n above default_max_n without
// allow_large, or an invalid region.
void validate(BenchConfig const& config);

// Algorithms that will run at size n under `config`.
std::vector<Algorithm> algorithms_for(BenchConfig const& config, std::size_t n);

// One row per n, in n_list order. Every run is verified; an unverified run
// throws BenchVerificationError naming its seed and n. When `records` is
// given it receives every run in (n, trial, algorithm) order.
std::vector<BenchRow> run_bench(BenchConfig const& config,
                                std::vector<RunRecord>* records = nullptr);

// Column order is fixed:
//   n,trials,gcc,gcc_i,mis,mis_i,ratio_gcci_mis,two_sqrt_n,three_sqrt_n,
//   external_baseline,gcc_ms,gcc_i_ms,mis_ms,mis_i_ms
// Means and ratios are printed with 6 decimals. external_baseline is always
// empty and reserved for hand-entered comparison values. Timing columns are
// left empty unless `with_timings`, keeping the default output reproducible.
void write_bench_csv(std::ostream& out, std::vector<BenchRow> const& rows,
                     bool with_timings);

void write_run_records_csv(std::ostream& out, std::vector<RunRecord> const& records);

// Gnuplot script drawing the cover and independent-set means against 3√n
// and 2√n from the CSV at `csv_path`.
void write_gnuplot_script(std::ostream& out, std::string const& csv_path);

// ---- verify --------------------------------------------------------------

struct VerifyConfig {
    std::size_t count = 100;
    std::size_t n = 15;
    std::uint64_t seed = 1;
    OracleLimits limits{};
    // Test hook: corrupt the gcc cover of the first instance so the
    // validity check must fail.
    bool inject_invalid_cover = false;
};

struct VerifyFailure {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string check;
};

struct VerifyReport {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

// For each random instance: sweep clique size equals the candidate-point
// maximum, find_simplicial agrees with the exhaustive scan, all heuristic
// outputs are valid, and mis, mis-i <= exact MIS <= exact MCC <= gcc-i, gcc.
// Throws OracleCapExceeded when n exceeds either oracle cap.
VerifyReport run_verify(VerifyConfig const& config);

} // namespace rectcover

#endif
