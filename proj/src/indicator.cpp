#include "hvperf/indicator.hpp"

#include <algorithm>
#include <limits>

namespace hvperf {

namespace {

// avoids a negative zero for an archive sitting exactly on the nadir
auto negated(double hv) noexcept -> double { return hv == 0.0 ? 0.0 : -hv; }

} // namespace

auto to_string(Branch b) -> std::string_view
{
    return b == Branch::Hypervolume ? "hypervolume" : "distance";
}

auto empty_indicator() noexcept -> IndicatorValue
{
    return { std::numeric_limits<double>::infinity(), Branch::Distance };
}

auto evaluate(Archive const& arch) -> IndicatorValue
{
    if (arch.empty()) {
        return empty_indicator();
    }
    bool dominates_nadir = std::any_of(arch.begin(), arch.end(), [](auto const& kv) {
        return kv.second.point.u <= 1.0 && kv.second.point.v <= 1.0;
    });
    if (dominates_nadir) {
        return { negated(arch.hypervolume()), Branch::Hypervolume };
    }
    return { arch.min_distance_to_roi(), Branch::Distance };
}

auto evaluate_incremental(IndicatorValue const& prev, InsertOutcome const& outcome, Archive const& arch)
    -> IndicatorValue
{
    if (!outcome.accepted) {
        return prev;
    }
    if (prev.branch == Branch::Hypervolume) {
        return { negated(arch.hypervolume()), Branch::Hypervolume };
    }
    // Distance branch: the archive reaches the nadir exactly when its ROI
    // distance drops to zero (the clamped excess above 1 vanishes in both
    // coordinates).
    double dist = arch.min_distance_to_roi();
    if (dist == 0.0) {
        return { negated(arch.hypervolume()), Branch::Hypervolume };
    }
    return { dist, Branch::Distance };
}

} // namespace hvperf
