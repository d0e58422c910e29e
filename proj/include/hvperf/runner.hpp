#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hvperf/datalog.hpp"
#include "hvperf/optimizers.hpp"
#include "hvperf/refset.hpp"
#include "hvperf/suite.hpp"
#include "hvperf/targets.hpp"

namespace hvperf {

struct ExperimentConfig {
    std::vector<std::string> functions { "f1", "f2", "f3" };
    std::vector<int> dimensions { 2 };
    std::vector<int> instances { 1, 2, 3, 4, 5, 6, 7, 8, 9, 10 };
    std::string algorithm { "random" };
    // per-problem evaluation budget; defaults to 10^4 times the dimension
    std::optional<std::int64_t> budget;
    std::filesystem::path out;
    std::uint32_t seed { 1 };
    // directory of reference-set files; when absent, reference sets are
    // bootstrapped into <out>/refsets first
    std::optional<std::filesystem::path> refsets;
    std::int64_t bootstrap_budget { 100000 };
    unsigned threads { 1 };
};

struct RunResult {
    ProblemKey key;
    std::filesystem::path log;
    std::vector<TrajectoryPoint> trajectory;
    RuntimeRecord runtimes;
    std::string refset_version;
};

struct ExperimentResult {
    std::vector<RunResult> runs;
    std::vector<IndexEntry> index;
    std::filesystem::path index_file;
};

/// One run of `optimizer` on `fn`: every evaluation goes through
/// insert -> evaluate_incremental -> record, and each archive-entering
/// solution is appended to the log at `log_path`.
[[nodiscard]] auto run_problem(SuiteFunction const& fn, ProblemSpec const& spec, Optimizer const& optimizer,
                               std::int64_t budget, Engine& rng, std::filesystem::path const& log_path) -> RunResult;

/// Runs the configured algorithm once on each selected problem. Writes
/// <out>/<algorithm>/<problem>.tsv logs, runtimes.tsv and, last,
/// experiment_index.tsv. Per-problem randomness depends only on the seed
/// and the problem, so thread count does not change the output.
[[nodiscard]] auto run_experiment(ExperimentConfig const& cfg) -> ExperimentResult;

struct BootstrapConfig {
    std::vector<std::string> functions { "f1", "f2", "f3" };
    std::vector<int> dimensions { 2, 3, 5, 10 };
    std::vector<int> instances { 1, 2, 3, 4, 5, 6, 7, 8, 9, 10 };
    std::filesystem::path out;
    std::uint32_t seed { 1 };
    // evaluations per baseline per problem
    std::int64_t budget { 100000 };
    unsigned threads { 1 };
};

/// Runs every built-in baseline on `key`, merges their archives and returns
/// the reference set together with its problem specification. Bounds are
/// analytic where the suite function provides them, estimated from the
/// merged set otherwise.
[[nodiscard]] auto bootstrap_problem(ProblemKey const& key, std::int64_t budget, std::uint32_t seed) -> RefsetFile;

/// bootstrap_problem over the configured problems, writing one reference-set
/// file per problem into `cfg.out`.
auto bootstrap_refsets(BootstrapConfig const& cfg) -> std::vector<RefsetFile>;

/// Loads the reference set for `key` from `dir`; throws std::runtime_error
/// naming the problem when the file is missing.
[[nodiscard]] auto load_problem_spec(std::filesystem::path const& dir, ProblemKey const& key) -> ProblemSpec;

struct RecalcConfig {
    std::filesystem::path logs;
    std::filesystem::path refsets;
    std::filesystem::path out;
};

/// Replays every logged run found under `cfg.logs` against the reference sets
/// in `cfg.refsets`, writing re-headed logs, runtimes.tsv and
/// experiment_index.tsv per algorithm into `cfg.out`.
auto recalc_experiment(RecalcConfig const& cfg) -> std::vector<ExperimentResult>;

/// Algorithms with an experiment index directly under `dir`, sorted.
[[nodiscard]] auto find_algorithms(std::filesystem::path const& dir) -> std::vector<std::string>;

/// Default budget: 10^4 evaluations per variable.
[[nodiscard]] constexpr auto default_budget(int dimension) -> std::int64_t { return 10000LL * dimension; }

} // namespace hvperf
