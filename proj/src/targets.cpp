#include "hvperf/targets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hvperf {

namespace {

auto build_grid() -> PrecisionGrid
{
    PrecisionGrid grid {};
    std::size_t i = 0;
    for (int k = 40; k <= 50; k += 2) {
        grid[i++] = -std::pow(10.0, static_cast<double>(-k) / 10.0);
    }
    grid[i++] = 0.0;
    for (int k = 50; k >= 0; --k) {
        grid[i++] = std::pow(10.0, static_cast<double>(-k) / 10.0);
    }
    return grid;
}

} // namespace

auto precision_grid() -> PrecisionGrid const&
{
    static PrecisionGrid const grid = build_grid();
    return grid;
}

auto find_precision(double precision) -> std::optional<std::size_t>
{
    auto const& grid = precision_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (precision == grid[i] || std::abs(precision - grid[i]) <= 1e-9 * std::abs(grid[i])) {
            return i;
        }
    }
    return std::nullopt;
}

auto absolute_targets(ProblemSpec const& p, std::span<double const> grid) -> std::vector<double>
{
    std::vector<double> out;
    out.reserve(grid.size());
    for (double d : grid) {
        out.push_back(p.i_ref + d);
    }
    return out;
}

RuntimeRecord::RuntimeRecord(std::vector<double> targets)
    : targets_(std::move(targets))
    , hits_(targets_.size())
    , order_(targets_.size())
{
    std::iota(order_.begin(), order_.end(), std::size_t { 0 });
    std::stable_sort(order_.begin(), order_.end(), [this](auto a, auto b) { return targets_[a] > targets_[b]; });
}

void RuntimeRecord::record(std::int64_t t, IndicatorValue const& value)
{
    if (t <= last_t_) {
        throw UsageError("runtime record: evaluation " + std::to_string(t) + " not after "
                         + std::to_string(last_t_));
    }
    last_t_ = t;
    evaluations_ = std::max(evaluations_, t);
    while (cursor_ < order_.size() && value.value <= targets_[order_[cursor_]]) {
        hits_[order_[cursor_]] = t;
        ++cursor_;
    }
}

void RuntimeRecord::set_evaluations(std::int64_t evaluations)
{
    if (evaluations < last_t_) {
        throw UsageError("runtime record: evaluations below last recorded evaluation");
    }
    evaluations_ = evaluations;
}

auto RuntimeRecord::hit_count() const noexcept -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(hits_.begin(), hits_.end(), [](auto const& h) { return h.has_value(); }));
}

} // namespace hvperf
