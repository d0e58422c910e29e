#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hvperf/core.hpp"
#include "hvperf/indicator.hpp"

namespace hvperf {

inline constexpr std::size_t kPrecisionCount = 58;

/// Target precisions in ascending numeric order:
///   -10^-4, -10^-4.2, -10^-4.4, -10^-4.6, -10^-4.8, -10^-5, 0,
///   10^-5, 10^-4.9, ..., 10^-0.1, 10^0.
/// Each nonzero value is one std::pow(10, -k/10) call on an integer k.
using PrecisionGrid = std::array<double, kPrecisionCount>;

[[nodiscard]] auto precision_grid() -> PrecisionGrid const&;

/// Index of `precision` in the grid (relative tolerance 1e-9), if present.
[[nodiscard]] auto find_precision(double precision) -> std::optional<std::size_t>;

/// targets[k] = i_ref + grid[k].
[[nodiscard]] auto absolute_targets(ProblemSpec const& p, std::span<double const> grid) -> std::vector<double>;

/// First-hit runtimes of one run against a list of absolute targets.
///
/// Targets are kept in the order given (ascending for the standard grid). A
/// target counts as hit once the indicator is <= the target.
class RuntimeRecord {
public:
    RuntimeRecord() = default;
    explicit RuntimeRecord(std::vector<double> targets);

    /// Feed the indicator value reached after `t` evaluations. `t` must
    /// strictly increase across calls (UsageError otherwise) and the values
    /// must form a non-increasing trajectory.
    void record(std::int64_t t, IndicatorValue const& value);

    /// Total evaluations spent by the run; must not be below the last
    /// recorded evaluation.
    void set_evaluations(std::int64_t evaluations);

    [[nodiscard]] auto targets() const noexcept -> std::span<double const> { return targets_; }
    [[nodiscard]] auto first_hits() const noexcept -> std::span<std::optional<std::int64_t> const> { return hits_; }
    [[nodiscard]] auto evaluations() const noexcept -> std::int64_t { return evaluations_; }
    [[nodiscard]] auto hit_count() const noexcept -> std::size_t;

    friend auto operator==(RuntimeRecord const&, RuntimeRecord const&) -> bool = default;

private:
    std::vector<double> targets_;
    std::vector<std::optional<std::int64_t>> hits_;
    // targets are visited from easiest (largest) to hardest; entries above the
    // cursor are all hit
    std::vector<std::size_t> order_;
    std::size_t cursor_ { 0 };
    std::int64_t last_t_ { 0 };
    std::int64_t evaluations_ { 0 };
};

} // namespace hvperf
