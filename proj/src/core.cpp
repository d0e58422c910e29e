#include "hvperf/core.hpp"

#include <algorithm>
#include <cmath>

#include "hvperf/text.hpp"

namespace hvperf {

auto ProblemKey::file_stem() const -> std::string
{
    return function_id + "_d" + std::to_string(dimension) + "_i" + std::to_string(instance_id);
}

auto ProblemKey::id() const -> std::string
{
    return function_id + ":" + std::to_string(dimension) + ":" + std::to_string(instance_id);
}

void ProblemSpec::validate() const
{
    if (!is_finite(ideal) || !is_finite(nadir)) {
        throw DomainError("problem " + key.id() + ": ideal and nadir must be finite");
    }
    if (!(ideal.f_alpha < nadir.f_alpha) || !(ideal.f_beta < nadir.f_beta)) {
        throw DomainError("problem " + key.id() + ": ideal must be strictly below nadir in both objectives");
    }
    if (!(i_ref >= -1.0 && i_ref <= 0.0)) {
        throw DomainError("problem " + key.id() + ": i_ref " + text::format_real(i_ref) + " outside [-1, 0]");
    }
}

auto is_finite(ObjectiveVector const& y) noexcept -> bool
{
    return std::isfinite(y.f_alpha) && std::isfinite(y.f_beta);
}

auto is_finite(NormalizedObjectives const& y) noexcept -> bool
{
    return std::isfinite(y.u) && std::isfinite(y.v);
}

auto normalize(ObjectiveVector const& y, ProblemSpec const& p) -> NormalizedObjectives
{
    if (!std::isfinite(y.f_alpha)) {
        throw DomainError("normalize: f_alpha is not finite");
    }
    if (!std::isfinite(y.f_beta)) {
        throw DomainError("normalize: f_beta is not finite");
    }
    return {
        (y.f_alpha - p.ideal.f_alpha) / (p.nadir.f_alpha - p.ideal.f_alpha),
        (y.f_beta - p.ideal.f_beta) / (p.nadir.f_beta - p.ideal.f_beta),
    };
}

auto denormalize(NormalizedObjectives const& y, ProblemSpec const& p) -> ObjectiveVector
{
    return {
        std::fma(y.u, p.nadir.f_alpha - p.ideal.f_alpha, p.ideal.f_alpha),
        std::fma(y.v, p.nadir.f_beta - p.ideal.f_beta, p.ideal.f_beta),
    };
}

auto set_dominates(std::span<NormalizedObjectives const> a, std::span<NormalizedObjectives const> b) -> bool
{
    if (a.empty() || b.empty()) {
        throw DomainError("set_dominates: both sets must be non-empty");
    }
    return std::all_of(b.begin(), b.end(), [&](auto const& q) {
        return std::any_of(a.begin(), a.end(), [&](auto const& p) { return dominates(p, q); });
    });
}

} // namespace hvperf
