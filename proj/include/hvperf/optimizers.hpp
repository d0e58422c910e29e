#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hvperf/random.hpp"
#include "hvperf/suite.hpp"

namespace hvperf {

/// The only view an optimizer gets of a problem: dimension, search box,
/// remaining budget, and evaluate(x) -> objective pair. Every evaluation is
/// forwarded to the observer together with its 1-based evaluation count.
class BlackBox {
public:
    using Observer = std::function<void(std::int64_t, std::span<double const>, ObjectiveVector const&)>;

    BlackBox(SuiteFunction const& fn, std::int64_t budget, Observer observer);

    /// Throws UsageError once the budget is exhausted.
    auto evaluate(std::span<double const> x) -> ObjectiveVector;

    [[nodiscard]] auto dimension() const noexcept -> int { return fn_.dimension(); }
    [[nodiscard]] auto lower() const noexcept -> double { return kSearchLower; }
    [[nodiscard]] auto upper() const noexcept -> double { return kSearchUpper; }
    [[nodiscard]] auto evaluations() const noexcept -> std::int64_t { return evaluations_; }
    [[nodiscard]] auto remaining() const noexcept -> std::int64_t { return budget_ - evaluations_; }

private:
    SuiteFunction const& fn_;
    std::int64_t budget_;
    std::int64_t evaluations_ { 0 };
    Observer observer_;
};

class Optimizer {
public:
    virtual ~Optimizer() = default;
    [[nodiscard]] virtual auto name() const -> std::string = 0;
    /// Spends the whole remaining budget of `problem`.
    virtual void optimize(BlackBox& problem, Engine& rng) const = 0;
};

/// Uniform sampling of the search box.
class RandomSearch final : public Optimizer {
public:
    [[nodiscard]] auto name() const -> std::string override { return "random"; }
    void optimize(BlackBox& problem, Engine& rng) const override;
};

/// (1+1) hill climber with a one-fifth success rule on w f_alpha + (1-w) f_beta,
/// run once per weight in {0, 0.1, ..., 1} with an equal share of the budget.
class WeightedSumHillClimber final : public Optimizer {
public:
    [[nodiscard]] auto name() const -> std::string override { return "hillclimb"; }
    void optimize(BlackBox& problem, Engine& rng) const override;

    [[nodiscard]] static auto weights() -> std::vector<double>;
};

/// "random" or "hillclimb"; UsageError otherwise.
[[nodiscard]] auto make_optimizer(std::string const& name) -> std::unique_ptr<Optimizer>;
[[nodiscard]] auto optimizer_names() -> std::vector<std::string>;

} // namespace hvperf
