#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hvperf/core.hpp"

namespace hvperf {

struct ArchiveEntry {
    NormalizedObjectives point;
    std::int64_t eval_index { 0 };
    std::optional<std::vector<double>> decision;
};

struct InsertOutcome {
    bool accepted { false };
    std::size_t removed_count { 0 };
    double hv_gain { 0.0 };
    // +inf on the first acceptance into an empty archive
    double dist_gain { 0.0 };
};

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    [[nodiscard]] auto value() const noexcept -> double { return sum_ + carry_; }

private:
    double sum_ { 0.0 };
    double carry_ { 0.0 };
};

/// Distance of a point to the box [0,1]^2. Negative coordinates are clamped
/// to 0 first, so the result only depends on the excess above 1.
[[nodiscard]] auto distance_to_roi(NormalizedObjectives const& y) noexcept -> double;

/// Incremental non-dominated archive over normalized objective vectors.
///
/// Entries are kept in a map keyed on u; mutual non-dominance makes v
/// strictly decreasing along the map, so the predecessor of a candidate is the
/// only entry that can dominate it and the entries it dominates form a
/// contiguous run starting at its own position.
///
/// Hypervolume is taken w.r.t. the reference point (1,1) over entries with
/// u < 1 and v < 1. Negative coordinates (only possible with an approximate
/// ideal point) are clamped to 0 for hypervolume and distance, and counted in
/// clamp_count().
class Archive {
public:
    using Map = std::map<double, ArchiveEntry>;

    /// Throws UsageError when `eval_index` is not strictly greater than the
    /// previous one and DomainError for non-finite `y`.
    auto insert(NormalizedObjectives const& y, std::int64_t eval_index,
                std::optional<std::vector<double>> decision = std::nullopt) -> InsertOutcome;

    [[nodiscard]] auto hypervolume() const noexcept -> double { return hv_.value(); }

    /// Throws DomainError on an empty archive.
    [[nodiscard]] auto min_distance_to_roi() const -> double;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return entries_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return entries_.empty(); }
    [[nodiscard]] auto last_eval_index() const noexcept -> std::int64_t { return last_eval_; }
    [[nodiscard]] auto clamp_count() const noexcept -> std::size_t { return clamp_count_; }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    /// Entry points in ascending u order.
    [[nodiscard]] auto points() const -> std::vector<NormalizedObjectives>;

private:
    Map entries_;
    CompensatedSum hv_;
    double dist_ { std::numeric_limits<double>::infinity() };
    std::int64_t last_eval_ { 0 };
    std::size_t clamp_count_ { 0 };
};

struct ScratchValues {
    double hypervolume { 0.0 };
    std::optional<double> distance; // empty for an empty input
};

/// Independent sweep-line recomputation of hypervolume and ROI distance.
/// Sorts a copy of the input, so it also accepts dominated points.
[[nodiscard]] auto recompute_from_scratch(std::span<NormalizedObjectives const> points) -> ScratchValues;

} // namespace hvperf
