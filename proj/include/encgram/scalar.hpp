#ifndef ENCGRAM_SCALAR_HPP
#define ENCGRAM_SCALAR_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "encgram/civil_time.hpp"

namespace encgram {

/// The value vocabulary shared by specs, datasets and encode outputs:
/// null, finite number, UTF-8 text, boolean, or timestamp (epoch ms, UTC).
///
/// Numbers and timestamps are distinct classes; a timestamp never compares
/// equal to a number with the same magnitude.
class Scalar {
public:
    enum class Kind { Null, Number, Text, Boolean, Timestamp };

    Scalar() = default;
    Scalar(double v) : v_(v) {}
    Scalar(int v) : v_(static_cast<double>(v)) {}
    Scalar(bool v) : v_(v) {}
    Scalar(std::string v) : v_(std::move(v)) {}
    Scalar(const char* v) : v_(std::string(v)) {}

    static Scalar timestamp(std::int64_t epoch_ms) {
        Scalar s;
        s.v_ = epoch_ms;
        return s;
    }

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_null() const { return kind() == Kind::Null; }
    bool is_number() const { return kind() == Kind::Number; }
    bool is_text() const { return kind() == Kind::Text; }
    bool is_boolean() const { return kind() == Kind::Boolean; }
    bool is_timestamp() const { return kind() == Kind::Timestamp; }

    double number() const { return std::get<double>(v_); }
    const std::string& text() const { return std::get<std::string>(v_); }
    bool boolean() const { return std::get<bool>(v_); }
    std::int64_t timestamp_ms() const { return std::get<std::int64_t>(v_); }

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    std::variant<std::monostate, double, std::string, bool, std::int64_t> v_;
};

/// Coercion target classes used by scale domains and extent scans.
enum class ValueClass { Number, Timestamp };

/// Number coercion is strict: only number scalars qualify. Text that looks
/// numeric is coerced once, at CSV load time, never here.
inline std::optional<double> coerce_number(const Scalar& s) {
    if (s.is_number()) return s.number();
    return std::nullopt;
}

/// Timestamp coercion is permissive because JSON has no date literal:
/// timestamps pass through, numbers are taken as epoch ms, and text is
/// accepted when it parses as strict ISO 8601.
inline std::optional<std::int64_t> coerce_timestamp(const Scalar& s) {
    if (s.is_timestamp()) return s.timestamp_ms();
    if (s.is_number()) {
        double v = s.number();
        if (!std::isfinite(v)) return std::nullopt;
        return static_cast<std::int64_t>(std::llround(v));
    }
    if (s.is_text()) return parse_iso8601(s.text());
    return std::nullopt;
}

inline std::optional<double> coerce_class(const Scalar& s, ValueClass cls) {
    if (cls == ValueClass::Number) return coerce_number(s);
    auto ts = coerce_timestamp(s);
    if (!ts) return std::nullopt;
    return static_cast<double>(*ts);
}

inline std::string iso8601_text(std::int64_t epoch_ms) {
    CivilTime c = civil_from_epoch_ms(epoch_ms);
    char buf[40];
    if (c.is_midnight()) {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    } else if (c.second == 0 && c.millisecond == 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d", c.year, c.month, c.day,
                      c.hour, c.minute);
    } else if (c.millisecond == 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", c.year, c.month,
                      c.day, c.hour, c.minute, c.second);
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03d", c.year,
                      c.month, c.day, c.hour, c.minute, c.second, c.millisecond);
    }
    return buf;
}

}  // namespace encgram

#endif  // ENCGRAM_SCALAR_HPP
