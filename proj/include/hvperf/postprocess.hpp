#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvperf/core.hpp"
#include "hvperf/targets.hpp"

namespace hvperf {

/// A runtime record together with where it came from.
struct LabeledRecord {
    ProblemKey key;
    std::string algorithm;
    std::string refset_version;
    RuntimeRecord runtimes;
};

/// Fraction of (problem, target) pairs whose first hit is within each budget.
/// Plain ECDF over the recorded runs; no simulated restarts.
struct EcdfCurve {
    std::vector<std::int64_t> support;
    std::vector<double> proportion;
    std::vector<std::size_t> n_hit;
    std::size_t n_total { 0 };
};

/// Support defaults to the distinct first-hit values plus the largest
/// evaluation count spent by any run. Missed pairs never count as hit.
/// Throws DomainError for an empty input.
[[nodiscard]] auto ecdf(std::span<RuntimeRecord const> records,
                        std::optional<std::vector<std::int64_t>> budgets = std::nullopt) -> EcdfCurve;

struct RuntimeCell {
    std::optional<std::int64_t> first_hit;
    std::int64_t evaluations { 0 };

    /// Evaluation count, or "—" for a missed target.
    [[nodiscard]] auto text() const -> std::string;
};

struct RuntimeRow {
    double precision { 0.0 };
    std::size_t n_hit { 0 };       // over all instances of the block
    std::size_t n_instances { 0 };
    std::vector<RuntimeCell> cells; // displayed instances only
};

struct RuntimeTableBlock {
    std::string algorithm;
    std::string function_id;
    int dimension { 0 };
    std::vector<int> displayed_instances;
    std::vector<RuntimeRow> rows;
};

inline constexpr std::size_t kDefaultInstancesDisplayed = 5;

/// Per (algorithm, function, dimension) block, one row per requested
/// precision, showing the first `instances_display` instance ids. Throws
/// UsageError for a precision that is not on the standard grid.
[[nodiscard]] auto runtime_table(std::span<LabeledRecord const> records, std::span<double const> precisions,
                                 std::size_t instances_display = kDefaultInstancesDisplayed)
    -> std::vector<RuntimeTableBlock>;

/// Reads every experiment under `logs` and replays each run against the
/// reference values stored in its own header.
[[nodiscard]] auto load_experiment(std::filesystem::path const& logs) -> std::vector<LabeledRecord>;

/// Single identifier for the reference values behind a set of records:
/// hash over the sorted (problem, refset_version) pairs.
[[nodiscard]] auto combined_refset_version(std::span<LabeledRecord const> records) -> std::string;

void write_ecdf_csv(std::filesystem::path const& path, EcdfCurve const& curve, std::string const& algorithm,
                    std::string const& slice, std::optional<int> dimension, std::string const& refset_version);

struct PostprocessConfig {
    std::filesystem::path logs;
    std::filesystem::path out;
    std::vector<double> precisions { 1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 0.0, -1e-4 };
    std::size_t instances_display { kDefaultInstancesDisplayed };
};

/// Writes ecdf_<algorithm>_d<dim>.csv per slice, ecdf_<algorithm>_all.csv,
/// and runtime_table_<algorithm>.csv into `cfg.out`. Returns the files written.
auto postprocess(PostprocessConfig const& cfg) -> std::vector<std::filesystem::path>;

/// Same as postprocess() on records already in memory.
auto write_postprocess(std::span<LabeledRecord const> records, PostprocessConfig const& cfg)
    -> std::vector<std::filesystem::path>;

} // namespace hvperf
