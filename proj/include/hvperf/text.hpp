#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Locale-independent number formatting shared by the file formats.
namespace hvperf::text {

/// 17 significant digits, round-trips every finite double bit-exactly.
/// Infinities are written as "inf" / "-inf".
[[nodiscard]] auto format_real(double x) -> std::string;

[[nodiscard]] auto parse_real(std::string_view s) -> std::optional<double>;
[[nodiscard]] auto parse_int(std::string_view s) -> std::optional<std::int64_t>;

[[nodiscard]] auto split(std::string_view s, char sep) -> std::vector<std::string_view>;
[[nodiscard]] auto trim(std::string_view s) -> std::string_view;

/// 64-bit FNV-1a digest rendered as 16 lowercase hex digits.
[[nodiscard]] auto fnv1a_hex(std::string_view data) -> std::string;

} // namespace hvperf::text
