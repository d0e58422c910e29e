#include "hvperf/suite.hpp"

#include <cmath>

#include "hvperf/random.hpp"
#include "hvperf/text.hpp"

namespace hvperf {

namespace {

constexpr double kOptimumBound = 4.0;
constexpr double kConditioning = 6.0; // log10 of the ellipsoid condition number
constexpr std::uint32_t kSeedSalt = 0x62696f62;

auto squared_distance(std::span<double const> x, std::span<double const> c) -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - c[i];
        s += d * d;
    }
    return s;
}

// Gram-Schmidt on a Gaussian matrix; rows of the result are orthonormal.
auto random_rotation(Engine& rng, std::size_t n) -> std::vector<double>
{
    std::vector<double> m(n * n);
    for (auto& x : m) {
        x = gaussian(rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += m[i * n + k] * m[j * n + k];
            }
            for (std::size_t k = 0; k < n; ++k) {
                m[i * n + k] -= dot * m[j * n + k];
            }
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            norm += m[i * n + k] * m[i * n + k];
        }
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < n; ++k) {
            m[i * n + k] /= norm;
        }
    }
    return m;
}

} // namespace

SuiteFunction::SuiteFunction(ProblemKey key)
    : key_(std::move(key))
{
    std::uint32_t number = 0;
    if (key_.function_id == "f1") {
        kind_ = Kind::DoubleSphere;
        number = 1;
    } else if (key_.function_id == "f2") {
        kind_ = Kind::SphereEllipsoid;
        number = 2;
    } else if (key_.function_id == "f3") {
        kind_ = Kind::EllipsoidRotated;
        number = 3;
    } else {
        throw UsageError("unknown suite function '" + key_.function_id + "'");
    }
    if (key_.dimension < 1) {
        throw UsageError("dimension must be positive");
    }
    if (key_.instance_id < 1) {
        throw UsageError("instance ids start at 1");
    }

    auto n = static_cast<std::size_t>(key_.dimension);
    auto rng = make_engine({ number, static_cast<std::uint32_t>(key_.instance_id),
                             static_cast<std::uint32_t>(key_.dimension), kSeedSalt });
    a_.resize(n);
    b_.resize(n);
    do {
        for (std::size_t i = 0; i < n; ++i) {
            a_[i] = uniform(rng, -kOptimumBound, kOptimumBound);
            b_[i] = uniform(rng, -kOptimumBound, kOptimumBound);
        }
    } while (squared_separation() == 0.0);

    weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double exponent = n > 1 ? kConditioning * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
        weights_[i] = std::pow(10.0, exponent);
    }
    if (kind_ == Kind::EllipsoidRotated) {
        rotation_ = random_rotation(rng, n);
    }
}

auto SuiteFunction::ellipsoid(std::span<double const> x, std::span<double const> center) const -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - center[i];
        s += weights_[i] * d * d;
    }
    return s;
}

auto SuiteFunction::rotated_ellipsoid(std::span<double const> x, std::span<double const> center) const -> double
{
    auto n = x.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double z = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            z += rotation_[i * n + k] * (x[k] - center[k]);
        }
        s += weights_[i] * z * z;
    }
    return s;
}

auto SuiteFunction::squared_separation() const -> double
{
    return squared_distance(a_, b_);
}

auto SuiteFunction::evaluate(std::span<double const> x) const -> ObjectiveVector
{
    if (x.size() != a_.size()) {
        throw UsageError("evaluate " + key_.id() + ": expected " + std::to_string(a_.size())
                         + " variables, got " + std::to_string(x.size()));
    }
    switch (kind_) {
    case Kind::DoubleSphere:
        return { squared_distance(x, a_), squared_distance(x, b_) };
    case Kind::SphereEllipsoid:
        return { squared_distance(x, a_), ellipsoid(x, b_) };
    case Kind::EllipsoidRotated:
        return { ellipsoid(x, a_), rotated_ellipsoid(x, b_) };
    }
    return {};
}

auto SuiteFunction::has_analytic_front() const noexcept -> bool
{
    return kind_ == Kind::DoubleSphere;
}

auto SuiteFunction::analytic_ideal() const -> std::optional<ObjectiveVector>
{
    if (!has_analytic_front()) {
        return std::nullopt;
    }
    return ObjectiveVector { 0.0, 0.0 };
}

auto SuiteFunction::analytic_nadir() const -> std::optional<ObjectiveVector>
{
    if (!has_analytic_front()) {
        return std::nullopt;
    }
    double d2 = squared_separation();
    return ObjectiveVector { d2, d2 };
}

auto SuiteFunction::analytic_front_oracle(double t) const -> ObjectiveVector
{
    if (!has_analytic_front()) {
        throw UsageError("analytic front is only available for the double sphere (f1)");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw UsageError("front parameter must lie in [0, 1]");
    }
    double d2 = squared_separation();
    return { t * t * d2, (1.0 - t) * (1.0 - t) * d2 };
}

auto suite_function_ids() -> std::vector<std::string> const&
{
    static std::vector<std::string> const ids { "f1", "f2", "f3" };
    return ids;
}

auto suite_dimensions() -> std::vector<int> const&
{
    static std::vector<int> const dims { 2, 3, 5, 10 };
    return dims;
}

auto parse_problem_id(std::string_view id) -> ProblemKey
{
    auto parts = text::split(id, ':');
    if (parts.size() != 3) {
        throw UsageError("problem id '" + std::string(id) + "' is not <function>:<dimension>:<instance>");
    }
    auto dim = text::parse_int(parts[1]);
    auto inst = text::parse_int(parts[2]);
    if (!dim || !inst || parts[0].empty()) {
        throw UsageError("problem id '" + std::string(id) + "' is not <function>:<dimension>:<instance>");
    }
    return { std::string(parts[0]), static_cast<int>(*inst), static_cast<int>(*dim) };
}

auto enumerate_problems(std::span<std::string const> functions, std::span<int const> dimensions,
                        std::span<int const> instances) -> std::vector<ProblemKey>
{
    std::vector<ProblemKey> out;
    for (auto const& f : functions) {
        for (int d : dimensions) {
            for (int i : instances) {
                out.push_back({ f, i, d });
            }
        }
    }
    return out;
}

} // namespace hvperf
