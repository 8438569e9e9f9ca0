#ifndef ENCGRAM_CODEC_HPP
#define ENCGRAM_CODEC_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "encgram/civil_time.hpp"

// Value formatting: a deliberately tiny number/time pattern mini-language.
// All formatters are total; pattern validity is checked separately (by the
// validator) so formatting itself never throws.

namespace encgram {

/// Parsed shape of a number pattern. Grammar:
///   pattern = "" | ","? ( "d" | "." digits ("f" | "%") )
/// The empty pattern means "shortest text that round-trips".
struct NumberPattern {
    bool is_default = true;
    bool grouping = false;      ///< thousands separators in the integer part
    bool integer_only = false;  ///< "d": round to integer
    bool percent = false;       ///< multiply by 100, append '%'
    int precision = 0;          ///< fixed fractional digits for "f"/"%"
};

inline std::optional<NumberPattern> parse_number_pattern(std::string_view p) {
    NumberPattern pat;
    if (p.empty()) return pat;
    pat.is_default = false;
    std::size_t i = 0;
    if (p[i] == ',') {
        pat.grouping = true;
        ++i;
    }
    if (i >= p.size()) return std::nullopt;
    if (p[i] == 'd') {
        pat.integer_only = true;
        return i + 1 == p.size() ? std::optional<NumberPattern>(pat) : std::nullopt;
    }
    if (p[i] != '.') return std::nullopt;
    ++i;
    const std::size_t digits_begin = i;
    while (i < p.size() && p[i] >= '0' && p[i] <= '9') ++i;
    if (i == digits_begin || i >= p.size()) return std::nullopt;
    int n = 0;
    const auto [ptr, ec] = std::from_chars(p.data() + digits_begin, p.data() + i, n);
    if (ec != std::errc() || ptr != p.data() + i) return std::nullopt;
    // Doubles carry at most 1074 exact fractional digits; 330 covers every
    // distinguishable precision.
    if (n < 0 || n > 330) return std::nullopt;
    pat.precision = n;
    if (p[i] == '%') {
        pat.percent = true;
    } else if (p[i] != 'f') {
        return std::nullopt;
    }
    return i + 1 == p.size() ? std::optional<NumberPattern>(pat) : std::nullopt;
}

inline bool validate_number_pattern(std::string_view p) {
    return parse_number_pattern(p).has_value();
}

/// Time patterns admit literal text plus the tokens %Y %m %d %H %M %S %b %a.
inline bool validate_time_pattern(std::string_view p) {
    constexpr std::string_view tokens = "YmdHMSba";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != '%') continue;
        if (i + 1 >= p.size()) return false;
        if (tokens.find(p[i + 1]) == std::string_view::npos) return false;
        ++i;
    }
    return true;
}

namespace detail {

/// Fixed-point rendering with round-half-away-from-zero, taken over the
/// double's full decimal expansion. printf("%.*f") rounds to nearest even
/// and would disagree on e.g. 0.125 at two digits.
inline std::string fixed_round_half_away(double v, int precision) {
    const bool negative = std::signbit(v);
    const double a = std::fabs(v);
    // 309 integer digits (DBL_MAX) + '.' + 1080 fractional digits + NUL.
    char buf[1536];
    const int len = std::snprintf(buf, sizeof buf, "%.1080f", a);
    if (len <= 0) return "0";
    const std::string_view text(buf, static_cast<std::size_t>(len));
    const std::size_t dot = text.find('.');
    std::string int_part(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);

    std::string kept;
    kept.reserve(static_cast<std::size_t>(precision));
    for (int k = 0; k < precision; ++k)
        kept += k < static_cast<int>(frac.size()) ? frac[static_cast<std::size_t>(k)] : '0';
    const char decision = precision < static_cast<int>(frac.size())
                              ? frac[static_cast<std::size_t>(precision)]
                              : '0';

    if (decision >= '5') {
        std::string digits = int_part + kept;
        int k = static_cast<int>(digits.size()) - 1;
        for (; k >= 0; --k) {
            if (digits[static_cast<std::size_t>(k)] != '9') {
                ++digits[static_cast<std::size_t>(k)];
                break;
            }
            digits[static_cast<std::size_t>(k)] = '0';
        }
        if (k < 0) digits.insert(digits.begin(), '1');
        const std::size_t int_len = digits.size() - kept.size();
        int_part = digits.substr(0, int_len);
        kept = digits.substr(int_len);
    }

    bool all_zero = true;
    for (char c : int_part)
        if (c != '0') all_zero = false;
    for (char c : kept)
        if (c != '0') all_zero = false;

    std::string out;
    if (negative && !all_zero) out += '-';
    out += int_part;
    if (precision > 0) {
        out += '.';
        out += kept;
    }
    return out;
}

/// Inserts thousands separators into the integer part of a plain decimal.
inline std::string group_thousands(const std::string& s) {
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    std::size_t end = s.find('.');
    if (end == std::string::npos) end = s.size();
    std::string out = s.substr(0, start);
    const std::size_t n = end - start;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && (n - k) % 3 == 0) out += ',';
        out += s[start + k];
    }
    out += s.substr(end);
    return out;
}

/// Shortest decimal text that parses back to exactly x.
inline std::string shortest_round_trip(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Formats a finite number. Unparseable patterns fall back to the default
/// formatter; pattern validity is the validator's concern, not ours.
inline std::string format_number(double x, std::string_view pattern) {
    if (!std::isfinite(x)) return detail::shortest_round_trip(x);
    const auto pat = parse_number_pattern(pattern);
    if (!pat || pat->is_default) return detail::shortest_round_trip(x);
    const double v = pat->percent ? x * 100.0 : x;
    const int precision = pat->integer_only ? 0 : pat->precision;
    std::string out = detail::fixed_round_half_away(v, precision);
    if (pat->grouping) out = detail::group_thousands(out);
    if (pat->percent) out += '%';
    return out;
}

/// Formats an epoch-millisecond timestamp in UTC. The empty pattern renders
/// the date alone at exact midnight and date plus HH:MM otherwise. Unknown
/// %-sequences are copied verbatim so the function stays total.
inline std::string format_time(std::int64_t epoch_ms, std::string_view pattern) {
    const CivilTime ct = civil_from_epoch_ms(epoch_ms);
    std::string fallback;
    if (pattern.empty()) {
        fallback = ct.is_midnight() ? "%Y-%m-%d" : "%Y-%m-%d %H:%M";
        pattern = fallback;
    }
    const int weekday = weekday_from_days(floor_div(epoch_ms, kMsPerDay));
    char num[16];
    std::string out;
    out.reserve(pattern.size() + 8);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '%' || i + 1 >= pattern.size()) {
            out += pattern[i];
            continue;
        }
        const char tok = pattern[++i];
        switch (tok) {
            case 'Y':
                std::snprintf(num, sizeof num, "%04d", ct.year);
                out += num;
                break;
            case 'm':
                std::snprintf(num, sizeof num, "%02d", ct.month);
                out += num;
                break;
            case 'd':
                std::snprintf(num, sizeof num, "%02d", ct.day);
                out += num;
                break;
            case 'H':
                std::snprintf(num, sizeof num, "%02d", ct.hour);
                out += num;
                break;
            case 'M':
                std::snprintf(num, sizeof num, "%02d", ct.minute);
                out += num;
                break;
            case 'S':
                std::snprintf(num, sizeof num, "%02d", ct.second);
                out += num;
                break;
            case 'b':
                out += month_abbrev(ct.month);
                break;
            case 'a':
                out += weekday_abbrev(weekday);
                break;
            default:
                out += '%';
                out += tok;
                break;
        }
    }
    return out;
}

}  // namespace encgram

#endif  // ENCGRAM_CODEC_HPP
