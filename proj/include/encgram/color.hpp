#ifndef ENCGRAM_COLOR_HPP
#define ENCGRAM_COLOR_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

// Color parsing and sRGB interpolation for Color channels.

namespace encgram {

struct Rgba {
    int r = 0;       ///< 0..255
    int g = 0;       ///< 0..255
    int b = 0;       ///< 0..255
    double a = 1.0;  ///< 0..1

    friend bool operator==(const Rgba&, const Rgba&) = default;
};

namespace detail {

inline std::string_view trim_spaces(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

inline std::optional<Rgba> parse_hex_color(std::string_view digits) {
    if (digits.size() != 3 && digits.size() != 6 && digits.size() != 8) return std::nullopt;
    std::array<int, 8> nib{};
    for (std::size_t i = 0; i < digits.size(); ++i) {
        nib[i] = hex_nibble(digits[i]);
        if (nib[i] < 0) return std::nullopt;
    }
    Rgba c;
    if (digits.size() == 3) {
        c.r = nib[0] * 17;
        c.g = nib[1] * 17;
        c.b = nib[2] * 17;
    } else {
        c.r = nib[0] * 16 + nib[1];
        c.g = nib[2] * 16 + nib[3];
        c.b = nib[4] * 16 + nib[5];
        if (digits.size() == 8) c.a = (nib[6] * 16 + nib[7]) / 255.0;
    }
    return c;
}

inline std::optional<int> parse_color_component(std::string_view s) {
    s = trim_spaces(s);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    if (v < 0 || v > 255) return std::nullopt;
    return v;
}

inline std::optional<double> parse_alpha_component(std::string_view s) {
    s = trim_spaces(s);
    if (s.empty()) return std::nullopt;
    const std::string text(s);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) return std::nullopt;
    if (!(v >= 0.0 && v <= 1.0)) return std::nullopt;
    return v;
}

inline std::optional<Rgba> parse_rgb_call(std::string_view body, bool with_alpha) {
    std::array<std::string_view, 4> parts;
    std::size_t count = 0;
    while (true) {
        const std::size_t comma = body.find(',');
        if (count >= parts.size()) return std::nullopt;
        parts[count++] = comma == std::string_view::npos ? body : body.substr(0, comma);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (count != (with_alpha ? 4u : 3u)) return std::nullopt;
    Rgba c;
    const auto r = parse_color_component(parts[0]);
    const auto g = parse_color_component(parts[1]);
    const auto b = parse_color_component(parts[2]);
    if (!r || !g || !b) return std::nullopt;
    c.r = *r;
    c.g = *g;
    c.b = *b;
    if (with_alpha) {
        const auto a = parse_alpha_component(parts[3]);
        if (!a) return std::nullopt;
        c.a = *a;
    }
    return c;
}

/// The 16 CSS basic named colors plus pink.
struct NamedColor {
    std::string_view name;
    std::uint32_t rgb;
};

inline constexpr std::array<NamedColor, 17> named_colors{{
    {"aqua", 0x00ffff},
    {"black", 0x000000},
    {"blue", 0x0000ff},
    {"fuchsia", 0xff00ff},
    {"gray", 0x808080},
    {"green", 0x008000},
    {"lime", 0x00ff00},
    {"maroon", 0x800000},
    {"navy", 0x000080},
    {"olive", 0x808000},
    {"pink", 0xffc0cb},
    {"purple", 0x800080},
    {"red", 0xff0000},
    {"silver", 0xc0c0c0},
    {"teal", 0x008080},
    {"white", 0xffffff},
    {"yellow", 0xffff00},
}};

}  // namespace detail

/// Accepts #rgb, #rrggbb, #rrggbbaa, rgb(r,g,b), rgba(r,g,b,a), and the CSS
/// basic color names plus pink. Case-insensitive. Null means unparseable.
inline std::optional<Rgba> parse_color(std::string_view input) {
    const std::string_view trimmed = detail::trim_spaces(input);
    if (trimmed.empty()) return std::nullopt;
    if (trimmed.front() == '#') return detail::parse_hex_color(trimmed.substr(1));
    const std::string lower = detail::ascii_lower(trimmed);
    const std::string_view lv(lower);
    if (lv.size() >= 5 && lv.substr(0, 4) == "rgb(" && lv.back() == ')')
        return detail::parse_rgb_call(lv.substr(4, lv.size() - 5), false);
    if (lv.size() >= 6 && lv.substr(0, 5) == "rgba(" && lv.back() == ')')
        return detail::parse_rgb_call(lv.substr(5, lv.size() - 6), true);
    for (const auto& entry : detail::named_colors)
        if (entry.name == lv)
            return Rgba{static_cast<int>(entry.rgb >> 16) & 0xff,
                        static_cast<int>(entry.rgb >> 8) & 0xff,
                        static_cast<int>(entry.rgb) & 0xff, 1.0};
    return std::nullopt;
}

/// Per-component sRGB interpolation; channels round half away from zero,
/// alpha stays fractional. Pre: t in [0,1].
inline Rgba interpolate_color(const Rgba& c1, const Rgba& c2, double t) {
    const auto lerp = [t](int a, int b) { return static_cast<int>(std::lround(a + t * (b - a))); };
    Rgba out;
    out.r = lerp(c1.r, c2.r);
    out.g = lerp(c1.g, c2.g);
    out.b = lerp(c1.b, c2.b);
    out.a = c1.a + t * (c2.a - c1.a);
    return out;
}

/// Canonical emission: lowercase #rrggbb when opaque, otherwise
/// rgba(r,g,b,a) with alpha at up to three decimals, trailing zeros trimmed.
inline std::string color_to_text(const Rgba& c) {
    char buf[64];
    if (c.a >= 1.0) {
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.3f", c.a);
    std::string alpha(buf);
    while (!alpha.empty() && alpha.back() == '0') alpha.pop_back();
    if (!alpha.empty() && alpha.back() == '.') alpha.pop_back();
    std::snprintf(buf, sizeof buf, "rgba(%d,%d,%d,%s)", c.r, c.g, c.b, alpha.c_str());
    return buf;
}

}  // namespace encgram

#endif  // ENCGRAM_COLOR_HPP
