#include "hvperf/optimizers.hpp"

#include <algorithm>
#include <cmath>

namespace hvperf {

BlackBox::BlackBox(SuiteFunction const& fn, std::int64_t budget, Observer observer)
    : fn_(fn)
    , budget_(budget)
    , observer_(std::move(observer))
{
}

auto BlackBox::evaluate(std::span<double const> x) -> ObjectiveVector
{
    if (evaluations_ >= budget_) {
        throw UsageError("evaluation budget exhausted");
    }
    auto y = fn_.evaluate(x);
    ++evaluations_;
    if (observer_) {
        observer_(evaluations_, x, y);
    }
    return y;
}

void RandomSearch::optimize(BlackBox& problem, Engine& rng) const
{
    std::vector<double> x(static_cast<std::size_t>(problem.dimension()));
    while (problem.remaining() > 0) {
        for (auto& xi : x) {
            xi = uniform(rng, problem.lower(), problem.upper());
        }
        (void)problem.evaluate(x);
    }
}

auto WeightedSumHillClimber::weights() -> std::vector<double>
{
    std::vector<double> w;
    for (int k = 0; k <= 10; ++k) {
        w.push_back(static_cast<double>(k) / 10.0);
    }
    return w;
}

void WeightedSumHillClimber::optimize(BlackBox& problem, Engine& rng) const
{
    constexpr double kIncrease = 1.5;
    double const decrease = std::pow(kIncrease, -0.25);
    double const width = problem.upper() - problem.lower();

    auto const ws = weights();
    auto n = static_cast<std::size_t>(problem.dimension());
    std::vector<double> parent(n);
    std::vector<double> child(n);

    for (std::size_t k = 0; k < ws.size() && problem.remaining() > 0; ++k) {
        double w = ws[k];
        auto share = problem.remaining() / static_cast<std::int64_t>(ws.size() - k);
        share = std::max<std::int64_t>(share, 1);
        auto scalar = [w](ObjectiveVector const& y) { return w * y.f_alpha + (1.0 - w) * y.f_beta; };

        for (auto& xi : parent) {
            xi = uniform(rng, problem.lower(), problem.upper());
        }
        double best = scalar(problem.evaluate(parent));
        double sigma = 0.2 * width;
        for (std::int64_t i = 1; i < share && problem.remaining() > 0; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                child[j] = std::clamp(parent[j] + sigma * gaussian(rng), problem.lower(), problem.upper());
            }
            double f = scalar(problem.evaluate(child));
            if (f <= best) {
                best = f;
                parent.swap(child);
                sigma *= kIncrease;
            } else {
                sigma *= decrease;
            }
            sigma = std::clamp(sigma, 1e-300, width);
        }
    }
}

auto make_optimizer(std::string const& name) -> std::unique_ptr<Optimizer>
{
    if (name == "random") {
        return std::make_unique<RandomSearch>();
    }
    if (name == "hillclimb") {
        return std::make_unique<WeightedSumHillClimber>();
    }
    throw UsageError("unknown algorithm '" + name + "' (expected random or hillclimb)");
}

auto optimizer_names() -> std::vector<std::string>
{
    return { "random", "hillclimb" };
}

} // namespace hvperf
