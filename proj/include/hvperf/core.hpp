#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace hvperf {

// Error taxonomy used throughout the library. DomainError covers invalid
// numerical input, UsageError covers contract violations by the caller.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string const& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) { }

    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

class VersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point in the two-dimensional objective space, in problem units.
struct ObjectiveVector {
    double f_alpha { 0.0 };
    double f_beta { 0.0 };

    friend auto operator==(ObjectiveVector const&, ObjectiveVector const&) -> bool = default;
};

/// Objective values after the affine map sending the ideal point to (0,0)
/// and the nadir point to (1,1).
struct NormalizedObjectives {
    double u { 0.0 };
    double v { 0.0 };

    friend auto operator==(NormalizedObjectives const&, NormalizedObjectives const&) -> bool = default;
};

/// Identifies one function instance of the suite.
struct ProblemKey {
    std::string function_id;
    int instance_id { 0 };
    int dimension { 0 };

    friend auto operator==(ProblemKey const&, ProblemKey const&) -> bool = default;
    friend auto operator<=>(ProblemKey const&, ProblemKey const&) = default;

    /// "<function>_d<dim>_i<inst>", used for file names.
    [[nodiscard]] auto file_stem() const -> std::string;
    /// "<function>:<dim>:<inst>", the CLI form.
    [[nodiscard]] auto id() const -> std::string;
};

struct ProblemSpec {
    ProblemKey key;
    ObjectiveVector ideal;
    ObjectiveVector nadir;
    double i_ref { 0.0 };
    std::string refset_version;
    // true when ideal/nadir were estimated from a reference set rather than
    // known analytically
    bool approximate_bounds { false };

    /// Throws DomainError unless ideal < nadir strictly in both objectives,
    /// all values are finite, and -1 <= i_ref <= 0.
    void validate() const;
};

[[nodiscard]] auto is_finite(ObjectiveVector const& y) noexcept -> bool;
[[nodiscard]] auto is_finite(NormalizedObjectives const& y) noexcept -> bool;

/// Exact per-coordinate affine map; no clamping. Throws DomainError naming the
/// offending coordinate when `y` is not finite.
[[nodiscard]] auto normalize(ObjectiveVector const& y, ProblemSpec const& p) -> NormalizedObjectives;

/// Inverse of normalize.
[[nodiscard]] auto denormalize(NormalizedObjectives const& y, ProblemSpec const& p) -> ObjectiveVector;

/// Pareto dominance: no worse in both objectives and strictly better in at
/// least one. Equal points do not dominate each other.
[[nodiscard]] constexpr auto dominates(NormalizedObjectives const& a, NormalizedObjectives const& b) noexcept -> bool
{
    return a.u <= b.u && a.v <= b.v && (a.u < b.u || a.v < b.v);
}

[[nodiscard]] constexpr auto dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept -> bool
{
    return a.f_alpha <= b.f_alpha && a.f_beta <= b.f_beta && (a.f_alpha < b.f_alpha || a.f_beta < b.f_beta);
}

/// True iff every element of `b` is dominated by some element of `a`.
/// Throws DomainError when either set is empty.
[[nodiscard]] auto set_dominates(std::span<NormalizedObjectives const> a, std::span<NormalizedObjectives const> b) -> bool;

} // namespace hvperf
