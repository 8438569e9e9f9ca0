#ifndef ENCGRAM_CIVIL_TIME_HPP
#define ENCGRAM_CIVIL_TIME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Proleptic-Gregorian calendar arithmetic over epoch milliseconds.
// Everything here is UTC; there is no timezone or locale handling.

namespace encgram {

constexpr std::int64_t kMsPerSecond = 1000;
constexpr std::int64_t kMsPerMinute = 60 * kMsPerSecond;
constexpr std::int64_t kMsPerHour = 60 * kMsPerMinute;
constexpr std::int64_t kMsPerDay = 24 * kMsPerHour;

struct CivilTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;
    int minute = 0;
    int second = 0;
    int millisecond = 0;

    bool is_midnight() const {
        return hour == 0 && minute == 0 && second == 0 && millisecond == 0;
    }
};

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
constexpr std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

constexpr bool is_leap_year(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

constexpr int days_in_month(int y, int m) {
    constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap_year(y)) return 29;
    return lengths[m - 1];
}

// Floored division/modulo so pre-1970 instants break down correctly.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

inline CivilTime civil_from_epoch_ms(std::int64_t ms) {
    CivilTime c;
    const std::int64_t days = floor_div(ms, kMsPerDay);
    std::int64_t rem = floor_mod(ms, kMsPerDay);
    civil_from_days(days, c.year, c.month, c.day);
    c.hour = static_cast<int>(rem / kMsPerHour);
    rem %= kMsPerHour;
    c.minute = static_cast<int>(rem / kMsPerMinute);
    rem %= kMsPerMinute;
    c.second = static_cast<int>(rem / kMsPerSecond);
    c.millisecond = static_cast<int>(rem % kMsPerSecond);
    return c;
}

inline std::int64_t epoch_ms_from_civil(const CivilTime& c) {
    return days_from_civil(c.year, c.month, c.day) * kMsPerDay + c.hour * kMsPerHour +
           c.minute * kMsPerMinute + c.second * kMsPerSecond + c.millisecond;
}

// 0 = Sunday .. 6 = Saturday.
constexpr int weekday_from_days(std::int64_t z) {
    return static_cast<int>(floor_mod(z + 4, 7));
}

inline const char* month_abbrev(int m) {
    static const char* names[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                  "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    return names[m - 1];
}

inline const char* weekday_abbrev(int wd) {
    static const char* names[] = {"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
    return names[wd];
}

namespace detail {

inline bool read_digits(std::string_view s, std::size_t& pos, int count, int& out) {
    if (pos + static_cast<std::size_t>(count) > s.size()) return false;
    int v = 0;
    for (int i = 0; i < count; ++i) {
        char c = s[pos + static_cast<std::size_t>(i)];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    pos += static_cast<std::size_t>(count);
    out = v;
    return true;
}

}  // namespace detail

// Strict ISO 8601 subset: YYYY-MM-DD, optionally followed by ('T' or ' ')
// HH:MM, optional :SS, optional .mmm, optional trailing 'Z'. Returns epoch ms.
inline std::optional<std::int64_t> parse_iso8601(std::string_view s) {
    std::size_t pos = 0;
    CivilTime c;
    if (!detail::read_digits(s, pos, 4, c.year)) return std::nullopt;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!detail::read_digits(s, pos, 2, c.month)) return std::nullopt;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!detail::read_digits(s, pos, 2, c.day)) return std::nullopt;
    if (c.month < 1 || c.month > 12) return std::nullopt;
    if (c.day < 1 || c.day > days_in_month(c.year, c.month)) return std::nullopt;
    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != ' ') return std::nullopt;
        ++pos;
        if (!detail::read_digits(s, pos, 2, c.hour)) return std::nullopt;
        if (pos >= s.size() || s[pos] != ':') return std::nullopt;
        ++pos;
        if (!detail::read_digits(s, pos, 2, c.minute)) return std::nullopt;
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            if (!detail::read_digits(s, pos, 2, c.second)) return std::nullopt;
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                if (!detail::read_digits(s, pos, 3, c.millisecond)) return std::nullopt;
            }
        }
        if (c.hour > 23 || c.minute > 59 || c.second > 59) return std::nullopt;
        if (pos < s.size() && s[pos] == 'Z') ++pos;
    }
    if (pos != s.size()) return std::nullopt;
    return epoch_ms_from_civil(c);
}

}  // namespace encgram

#endif  // ENCGRAM_CIVIL_TIME_HPP
