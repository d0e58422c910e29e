#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace hvperf {

// std::mt19937_64 has a fully specified output sequence; the real-valued
// conversions below are written out so that instances and baseline runs do
// not depend on the standard library's distribution implementations.
using Engine = std::mt19937_64;

[[nodiscard]] inline auto make_engine(std::initializer_list<std::uint32_t> seed) -> Engine
{
    std::seed_seq seq(seed);
    return Engine(seq);
}

/// Uniform in [0, 1) with 53 random bits.
[[nodiscard]] inline auto uniform01(Engine& rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

[[nodiscard]] inline auto uniform(Engine& rng, double lo, double hi) -> double
{
    return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal sample (Box-Muller, one output per call).
[[nodiscard]] inline auto gaussian(Engine& rng) -> double
{
    double u1 = 1.0 - uniform01(rng); // (0, 1]
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace hvperf
