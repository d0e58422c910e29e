#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "hvperf/core.hpp"
#include "hvperf/indicator.hpp"
#include "hvperf/targets.hpp"

namespace hvperf {

inline constexpr int kRunLogFormatVersion = 1;

struct RunHeader {
    ProblemKey key;
    std::string algorithm;
    std::string refset_version;
    double i_ref { 0.0 };
    ObjectiveVector ideal;
    ObjectiveVector nadir;

    friend auto operator==(RunHeader const&, RunHeader const&) -> bool = default;
};

[[nodiscard]] auto make_header(ProblemSpec const& spec, std::string algorithm) -> RunHeader;
[[nodiscard]] auto spec_of(RunHeader const& header) -> ProblemSpec;

/// One archive-entering evaluation, raw objective values.
struct LogRecord {
    std::int64_t eval { 0 };
    ObjectiveVector y;
    std::vector<double> x;

    friend auto operator==(LogRecord const&, LogRecord const&) -> bool = default;
};

struct RunLog {
    RunHeader header;
    std::vector<LogRecord> records;
    // total evaluations spent; absent while the run is in progress
    std::optional<std::int64_t> evaluations;

    friend auto operator==(RunLog const&, RunLog const&) -> bool = default;
};

/// Streams a run log to disk as the run progresses.
///
/// Layout: "%"-prefixed header lines (format version first, then one
/// key=value per line), one tab-separated record per line
/// (eval, f_alpha, f_beta, x_1..x_n), and a closing "% evaluations=N" line.
class LogWriter {
public:
    LogWriter(std::filesystem::path path, RunHeader const& header);

    void append(LogRecord const& record);
    void finish(std::int64_t evaluations);

    [[nodiscard]] auto path() const noexcept -> std::filesystem::path const& { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::int64_t last_eval_ { 0 };
};

void write_log(std::filesystem::path const& path, RunLog const& log);

/// Throws ParseError (with line number) on malformed content and
/// VersionError on an unknown format version.
[[nodiscard]] auto read_log(std::filesystem::path const& path) -> RunLog;

/// "<out>/<algorithm>/<function>_d<dim>_i<inst>.tsv"
[[nodiscard]] auto run_log_path(std::filesystem::path const& out, std::string const& algorithm, ProblemKey const& key)
    -> std::filesystem::path;

struct TrajectoryPoint {
    std::int64_t eval { 0 };
    IndicatorValue value;

    friend auto operator==(TrajectoryPoint const&, TrajectoryPoint const&) -> bool = default;
};

struct Recalculation {
    std::vector<TrajectoryPoint> trajectory;
    RuntimeRecord runtimes;
};

/// Replays the log through a fresh archive under `spec` (its ideal, nadir and
/// i_ref). Throws DomainError when a record is not finite after
/// normalization or is rejected by the archive, which means the log is
/// corrupt.
[[nodiscard]] auto recalculate(RunLog const& log, ProblemSpec const& spec) -> Recalculation;

struct IndexEntry {
    std::string file; // relative to the index directory
    ProblemKey key;
    std::string algorithm;
    std::string refset_version;
    std::int64_t evaluations { 0 };

    friend auto operator==(IndexEntry const&, IndexEntry const&) -> bool = default;
};

/// "<out>/<algorithm>/experiment_index.tsv"
[[nodiscard]] auto index_path(std::filesystem::path const& out, std::string const& algorithm) -> std::filesystem::path;

void write_index(std::filesystem::path const& path, std::vector<IndexEntry> const& entries);
[[nodiscard]] auto read_index(std::filesystem::path const& path) -> std::vector<IndexEntry>;

/// Runtime records as "<function>\t<dim>\t<inst>\t<evaluations>\t<hit_1>..."
/// with "-" for missed targets.
void write_runtimes(std::filesystem::path const& path, std::vector<std::pair<ProblemKey, RuntimeRecord>> const& records);

} // namespace hvperf
