#ifndef ENCGRAM_SVG_HPP
#define ENCGRAM_SVG_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

// Tiny SVG emission helpers. Everything funnels through fmt3 so documents
// are byte-deterministic across runs and platforms.

namespace encgram {

/// Numeric attribute text: at most 3 decimals, trailing zeros trimmed, and
/// no negative zero. Non-finite inputs print as 0 so a document is always
/// well-formed.
inline std::string fmt3(double v) {
    if (!std::isfinite(v)) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        auto last = s.find_last_not_of('0');
        if (s[last] == '.') --last;
        s.erase(last + 1);
    }
    if (s == "-0") s = "0";
    return s;
}

/// Escapes text for use in both element content and attribute values.
inline std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c; break;
        }
    }
    return out;
}

inline std::string svg_open_tag(double width, double height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt3(width) + "\" height=\"" +
           fmt3(height) + "\" viewBox=\"0 0 " + fmt3(width) + " " + fmt3(height) + "\">";
}

}  // namespace encgram

#endif  // ENCGRAM_SVG_HPP
