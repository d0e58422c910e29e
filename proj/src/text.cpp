#include "hvperf/text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace hvperf::text {

auto format_real(double x) -> std::string
{
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::array<char, 32> buf {};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    (void)ec;
    return { buf.data(), end };
}

auto parse_real(std::string_view s) -> std::optional<double>
{
    s = trim(s);
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double x {};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc {} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return x;
}

auto parse_int(std::string_view s) -> std::optional<std::int64_t>
{
    s = trim(s);
    std::int64_t x {};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc {} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return x;
}

auto split(std::string_view s, char sep) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

auto trim(std::string_view s) -> std::string_view
{
    constexpr std::string_view ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

auto fnv1a_hex(std::string_view data) -> std::string
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::array<char, 17> buf {};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
    return { buf.data(), 16 };
}

} // namespace hvperf::text
