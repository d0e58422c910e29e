#include "hvperf/archive.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace hvperf {

namespace {

auto clamp_low(double x) noexcept -> double { return x < 0.0 ? 0.0 : x; }
auto clamp_unit(double x) noexcept -> double { return std::min(clamp_low(x), 1.0); }

} // namespace

void CompensatedSum::add(double x) noexcept
{
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        carry_ += (sum_ - t) + x;
    } else {
        carry_ += (x - t) + sum_;
    }
    sum_ = t;
}

auto distance_to_roi(NormalizedObjectives const& y) noexcept -> double
{
    double du = std::max(clamp_low(y.u) - 1.0, 0.0);
    double dv = std::max(clamp_low(y.v) - 1.0, 0.0);
    if (du == 0.0) {
        return dv;
    }
    if (dv == 0.0) {
        return du;
    }
    return std::hypot(du, dv);
}

auto Archive::insert(NormalizedObjectives const& y, std::int64_t eval_index,
                     std::optional<std::vector<double>> decision) -> InsertOutcome
{
    if (!is_finite(y)) {
        throw DomainError("archive insert: objective vector is not finite");
    }
    if (eval_index <= last_eval_) {
        throw UsageError("archive insert: eval_index " + std::to_string(eval_index)
                         + " not greater than previous " + std::to_string(last_eval_));
    }
    last_eval_ = eval_index;

    // The predecessor (largest u' <= u) has the smallest v' among all entries
    // with u' <= u, so it alone decides whether y is dominated or a duplicate.
    auto next = entries_.upper_bound(y.u);
    if (next != entries_.begin() && std::prev(next)->second.point.v <= y.v) {
        return {};
    }

    InsertOutcome out;
    out.accepted = true;

    auto first = entries_.lower_bound(y.u);
    double top = first != entries_.begin() ? clamp_unit(std::prev(first)->second.point.v) : 1.0;

    // Newly covered area, column by column under the old staircase: between
    // y.u and the first removed entry the old floor is the predecessor's v,
    // then each removed entry's own v, up to the successor's u. Every term is
    // non-negative.
    double left = clamp_low(y.u);
    double floor_v = top;
    double y_v = clamp_low(y.v);
    auto last = first;
    while (last != entries_.end() && last->second.point.v >= y.v) {
        double edge = clamp_unit(last->second.point.u);
        out.hv_gain += (edge - left) * (floor_v - y_v);
        left = edge;
        floor_v = clamp_unit(last->second.point.v);
        ++last;
        ++out.removed_count;
    }
    double right = last != entries_.end() ? clamp_unit(last->second.point.u) : 1.0;
    out.hv_gain += (right - left) * (floor_v - y_v);

    auto hint = entries_.erase(first, last);
    entries_.emplace_hint(hint, y.u, ArchiveEntry { y, eval_index, std::move(decision) });

    if (y.u < 0.0 || y.v < 0.0) {
        ++clamp_count_;
    }
    if (y.u < 1.0 && y.v < 1.0) {
        hv_.add(out.hv_gain);
    } else {
        out.hv_gain = 0.0;
    }

    // Anything removed was dominated by y and therefore no closer to the box,
    // so the running minimum stays exact.
    double d = distance_to_roi(y);
    out.dist_gain = std::max(0.0, dist_ - d);
    dist_ = std::min(dist_, d);
    return out;
}

auto Archive::min_distance_to_roi() const -> double
{
    if (entries_.empty()) {
        throw DomainError("min_distance_to_roi: archive is empty");
    }
    return dist_;
}

auto Archive::points() const -> std::vector<NormalizedObjectives>
{
    std::vector<NormalizedObjectives> out;
    out.reserve(entries_.size());
    for (auto const& [u, e] : entries_) {
        out.push_back(e.point);
    }
    return out;
}

auto recompute_from_scratch(std::span<NormalizedObjectives const> points) -> ScratchValues
{
    ScratchValues out;
    if (points.empty()) {
        return out;
    }

    std::vector<NormalizedObjectives> boxes;
    double dist = std::numeric_limits<double>::infinity();
    for (auto const& p : points) {
        dist = std::min(dist, distance_to_roi(p));
        if (p.u < 1.0 && p.v < 1.0) {
            boxes.push_back({ clamp_low(p.u), clamp_low(p.v) });
        }
    }
    out.distance = dist;

    std::sort(boxes.begin(), boxes.end(), [](auto const& a, auto const& b) {
        return a.u < b.u || (a.u == b.u && a.v < b.v);
    });
    CompensatedSum area;
    double lowest = 1.0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        lowest = std::min(lowest, boxes[i].v);
        double right = i + 1 < boxes.size() ? boxes[i + 1].u : 1.0;
        area.add((right - boxes[i].u) * (1.0 - lowest));
    }
    out.hypervolume = area.value();
    return out;
}

} // namespace hvperf
