#pragma once

#include <string_view>

#include "hvperf/archive.hpp"

namespace hvperf {

enum class Branch { Hypervolume, Distance };

[[nodiscard]] auto to_string(Branch b) -> std::string_view;

/// Quality indicator value, to be minimized. Lies in [-1, +inf); +inf marks
/// an empty archive.
struct IndicatorValue {
    double value { 0.0 };
    Branch branch { Branch::Distance };

    friend auto operator==(IndicatorValue const&, IndicatorValue const&) -> bool = default;
};

/// Indicator of an empty archive.
[[nodiscard]] auto empty_indicator() noexcept -> IndicatorValue;

/// Negative hypervolume when some entry weakly dominates the nadir (u <= 1 and
/// v <= 1), otherwise the normalized distance of the archive to [0,1]^2.
/// Decides the branch by scanning the entries.
[[nodiscard]] auto evaluate(Archive const& arch) -> IndicatorValue;

/// O(1) update after one insertion. `prev` must be the indicator of `arch`
/// before the insertion that produced `outcome`.
[[nodiscard]] auto evaluate_incremental(IndicatorValue const& prev, InsertOutcome const& outcome,
                                        Archive const& arch) -> IndicatorValue;

} // namespace hvperf
