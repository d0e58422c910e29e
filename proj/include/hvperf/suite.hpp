#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hvperf/core.hpp"

namespace hvperf {

/// Mini bi-objective suite.
///
///   f1  double sphere: ||x-a||^2, ||x-b||^2. Pareto set is the segment [a,b],
///       ideal (0,0) and nadir (d^2,d^2) with d = ||a-b|| are exact.
///   f2  sphere around a, separable ellipsoid around b.
///   f3  separable ellipsoid around a, rotated ellipsoid around b.
///
/// Ellipsoids use coefficients 10^(6 i/(n-1)). Instance parameters (the two
/// optima a, b in [-4,4]^n and the rotation of f3) come from std::mt19937_64
/// seeded with std::seed_seq{function number, instance, dimension, 0x62696f62}.
/// This pairing of single-objective instances is specific to this suite.
class SuiteFunction {
public:
    /// Throws UsageError for an unknown function id, dimension < 1 or
    /// instance < 1.
    explicit SuiteFunction(ProblemKey key);

    [[nodiscard]] auto key() const noexcept -> ProblemKey const& { return key_; }
    [[nodiscard]] auto dimension() const noexcept -> int { return key_.dimension; }

    /// Throws UsageError when x.size() != dimension().
    [[nodiscard]] auto evaluate(std::span<double const> x) const -> ObjectiveVector;

    [[nodiscard]] auto optimum_alpha() const noexcept -> std::span<double const> { return a_; }
    [[nodiscard]] auto optimum_beta() const noexcept -> std::span<double const> { return b_; }

    [[nodiscard]] auto has_analytic_front() const noexcept -> bool;
    [[nodiscard]] auto analytic_ideal() const -> std::optional<ObjectiveVector>;
    [[nodiscard]] auto analytic_nadir() const -> std::optional<ObjectiveVector>;

    /// f(a + t(b-a)) = (t^2 d^2, (1-t)^2 d^2) on the double sphere. Throws
    /// UsageError on other functions or for t outside [0,1].
    [[nodiscard]] auto analytic_front_oracle(double t) const -> ObjectiveVector;

private:
    enum class Kind { DoubleSphere, SphereEllipsoid, EllipsoidRotated };

    [[nodiscard]] auto ellipsoid(std::span<double const> x, std::span<double const> center) const -> double;
    [[nodiscard]] auto rotated_ellipsoid(std::span<double const> x, std::span<double const> center) const -> double;
    [[nodiscard]] auto squared_separation() const -> double;

    ProblemKey key_;
    Kind kind_;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<double> weights_;
    std::vector<double> rotation_; // row-major n x n, orthogonal
};

inline constexpr double kSearchLower = -5.0;
inline constexpr double kSearchUpper = 5.0;

[[nodiscard]] auto suite_function_ids() -> std::vector<std::string> const&;
[[nodiscard]] auto suite_dimensions() -> std::vector<int> const&;
inline constexpr int kInstancesPerFunction = 10;

/// Parses "<function>:<dimension>:<instance>".
[[nodiscard]] auto parse_problem_id(std::string_view id) -> ProblemKey;

/// All (function, dimension, instance) combinations in that nesting order.
[[nodiscard]] auto enumerate_problems(std::span<std::string const> functions, std::span<int const> dimensions,
                                      std::span<int const> instances) -> std::vector<ProblemKey>;

} // namespace hvperf
