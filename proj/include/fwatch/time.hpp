#pragma once

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fwatch {

using UtcSeconds = std::chrono::sys_seconds;
using UtcDate = std::chrono::sys_days;
using std::chrono::seconds;

namespace detail {

inline bool parse_fixed(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    for (std::size_t i = pos; i < pos + len; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    auto r = std::from_chars(s.data() + pos, s.data() + pos + len, out);
    return r.ec == std::errc{};
}

inline std::optional<UtcDate> make_date(int y, int m, int d) {
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return sys_days{ymd};
}

}  // namespace detail

/// Parses `YYYY-MM-DD`.
inline std::optional<UtcDate> parse_date(std::string_view s) {
    int y, m, d;
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!detail::parse_fixed(s, 0, 4, y) || !detail::parse_fixed(s, 5, 2, m) ||
        !detail::parse_fixed(s, 8, 2, d))
        return std::nullopt;
    return detail::make_date(y, m, d);
}

/// Parses `YYYY-MM-DDTHH:MM:SS[.fff](Z|+00:00)`. Fractional seconds are
/// truncated; only UTC offsets are accepted.
inline std::optional<UtcSeconds> parse_iso8601(std::string_view s) {
    if (s.size() < 20) return std::nullopt;
    auto date = parse_date(s.substr(0, 10));
    if (!date || (s[10] != 'T' && s[10] != ' ')) return std::nullopt;
    int hh, mm, ss;
    if (s[13] != ':' || s[16] != ':' || !detail::parse_fixed(s, 11, 2, hh) ||
        !detail::parse_fixed(s, 14, 2, mm) || !detail::parse_fixed(s, 17, 2, ss))
        return std::nullopt;
    if (hh > 23 || mm > 59 || ss > 59) return std::nullopt;
    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        if (digits == 0) return std::nullopt;
    }
    auto tz = s.substr(pos);
    if (tz != "Z" && tz != "+00:00") return std::nullopt;
    return UtcSeconds{*date} + std::chrono::hours{hh} + std::chrono::minutes{mm} + seconds{ss};
}

inline std::string format_date(UtcDate d) {
    std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

inline std::string format_iso8601(UtcSeconds t) {
    auto day = std::chrono::floor<std::chrono::days>(t);
    std::chrono::hh_mm_ss hms{t - day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(hms.hours().count()),
                  static_cast<int>(hms.minutes().count()),
                  static_cast<int>(hms.seconds().count()));
    return format_date(day) + buf;
}

inline UtcDate date_of(UtcSeconds t) { return std::chrono::floor<std::chrono::days>(t); }

/// First day of the month containing `d`.
inline UtcDate month_start(UtcDate d) {
    std::chrono::year_month_day ymd{d};
    return std::chrono::sys_days{ymd.year() / ymd.month() / 1};
}

inline UtcDate next_month(UtcDate first_of_month) {
    std::chrono::year_month_day ymd{first_of_month};
    return std::chrono::sys_days{(ymd.year() / ymd.month() + std::chrono::months{1}) / 1};
}

inline std::string format_month(UtcDate d) { return format_date(d).substr(0, 7); }

inline double to_hours(seconds s) { return static_cast<double>(s.count()) / 3600.0; }

/// Accepted range for feed timestamps: [2000-01-01, 2100-01-01).
inline bool in_feed_range(UtcSeconds t) {
    using namespace std::chrono;
    return t >= sys_days{year{2000} / 1 / 1} && t < sys_days{year{2100} / 1 / 1};
}

/// Portion of an interval falling in one calendar bucket (a day, or a
/// month keyed by its first day).
struct IntervalShare {
    UtcDate bucket;
    seconds duration;
};

/// Splits [a, b) at UTC midnights. Shares sum to b - a exactly.
inline std::vector<IntervalShare> split_by_day(UtcSeconds a, UtcSeconds b) {
    std::vector<IntervalShare> out;
    for (UtcDate d = date_of(a); UtcSeconds{d} < b; d += std::chrono::days{1}) {
        const UtcSeconds lo = std::max(UtcSeconds{d}, a);
        const UtcSeconds hi = std::min(UtcSeconds{d + std::chrono::days{1}}, b);
        if (hi > lo) out.push_back({d, hi - lo});
    }
    return out;
}

/// Splits [a, b) at UTC month starts.
inline std::vector<IntervalShare> split_by_month(UtcSeconds a, UtcSeconds b) {
    std::vector<IntervalShare> out;
    for (UtcDate m = month_start(date_of(a)); UtcSeconds{m} < b; m = next_month(m)) {
        const UtcSeconds lo = std::max(UtcSeconds{m}, a);
        const UtcSeconds hi = std::min(UtcSeconds{next_month(m)}, b);
        if (hi > lo) out.push_back({m, hi - lo});
    }
    return out;
}

}  // namespace fwatch
