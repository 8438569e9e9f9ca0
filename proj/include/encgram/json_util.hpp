#ifndef ENCGRAM_JSON_UTIL_HPP
#define ENCGRAM_JSON_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "encgram/errors.hpp"
#include "encgram/result.hpp"
#include "encgram/scalar.hpp"

// Strict JSON ingestion on top of the vendored parser. The stock DOM parser
// silently keeps the last of two duplicate keys; specs treat duplicates as
// author mistakes, so parsing runs through a SAX handler that tracks paths
// and rejects them.

namespace encgram {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string json_path_join(const std::string& parent, const std::string& key) {
    if (parent.empty()) return key;
    return parent + "." + key;
}

inline std::string json_path_index(const std::string& parent, std::size_t index) {
    return parent + "[" + std::to_string(index) + "]";
}

/// Trims the "[json.exception...]" prefix the vendored parser puts in front
/// of its diagnostics.
inline std::string clean_json_message(const std::string& what) {
    if (!what.empty() && what.front() == '[') {
        const std::size_t end = what.find("] ");
        if (end != std::string::npos) return what.substr(end + 2);
    }
    return what;
}

class StrictJsonSax {
public:
    bool null() { return add(ordered_json(nullptr)); }
    bool boolean(bool v) { return add(ordered_json(v)); }
    bool number_integer(std::int64_t v) { return add(ordered_json(v)); }
    bool number_unsigned(std::uint64_t v) { return add(ordered_json(v)); }
    bool number_float(double v, const std::string&) { return add(ordered_json(v)); }
    bool string(std::string& v) { return add(ordered_json(v)); }
    bool binary(ordered_json::binary_t& v) { return add(ordered_json(std::move(v))); }

    bool start_object(std::size_t) {
        frames_.push_back(Frame{ordered_json::object(), true, "", pending_path()});
        return true;
    }

    bool key(std::string& k) {
        Frame& top = frames_.back();
        if (top.node.contains(k)) {
            error_ = ParseError{json_path_join(top.path, k), "duplicate key"};
            return false;
        }
        top.pending_key = k;
        top.has_pending_key = true;
        return true;
    }

    bool end_object() {
        ordered_json done = std::move(frames_.back().node);
        frames_.pop_back();
        return add(std::move(done));
    }

    bool start_array(std::size_t) {
        frames_.push_back(Frame{ordered_json::array(), false, "", pending_path()});
        return true;
    }

    bool end_array() {
        ordered_json done = std::move(frames_.back().node);
        frames_.pop_back();
        return add(std::move(done));
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) {
        if (!error_) {
            error_ = ParseError{
                "", clean_json_message(ex.what()) + " (byte " + std::to_string(position) + ")"};
        }
        return false;
    }

    const std::optional<ParseError>& error() const { return error_; }
    ordered_json take_root() { return std::move(root_); }

private:
    struct Frame {
        ordered_json node;
        bool is_object = false;
        std::string pending_key;
        std::string path;
        bool has_pending_key = false;
    };

    std::string pending_path() const {
        if (frames_.empty()) return "";
        const Frame& top = frames_.back();
        if (top.is_object) return json_path_join(top.path, top.pending_key);
        return json_path_index(top.path, top.node.size());
    }

    bool add(ordered_json value) {
        if (frames_.empty()) {
            root_ = std::move(value);
            return true;
        }
        Frame& top = frames_.back();
        if (top.is_object) {
            top.node[top.pending_key] = std::move(value);
            top.has_pending_key = false;
        } else {
            top.node.push_back(std::move(value));
        }
        return true;
    }

    std::vector<Frame> frames_;
    ordered_json root_;
    std::optional<ParseError> error_;
};

}  // namespace detail

/// Parses JSON text, rejecting duplicate object keys with a path-addressed
/// error. Never throws on malformed input.
inline Result<ordered_json, ParseError> parse_json_strict(std::string_view text) {
    detail::StrictJsonSax handler;
    bool ok = false;
    try {
        ok = ordered_json::sax_parse(text, &handler);
    } catch (const nlohmann::detail::exception& ex) {
        return ParseError{"", detail::clean_json_message(ex.what())};
    }
    if (!ok || handler.error()) {
        if (handler.error()) return *handler.error();
        return ParseError{"", "malformed document"};
    }
    return handler.take_root();
}

/// Converts a JSON leaf to a Scalar. Timestamps never arise here: dates
/// travel as ISO text or epoch-ms numbers and are coerced at the boundary
/// that needs them (scale building, extent scans), which keeps document
/// round-trips byte-faithful.
inline Result<Scalar, std::string> json_to_scalar(const ordered_json& j) {
    if (j.is_null()) return Scalar{};
    if (j.is_boolean()) return Scalar(j.get<bool>());
    if (j.is_number()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) return std::string("non-finite number");
        return Scalar(v);
    }
    if (j.is_string()) return Scalar(j.get<std::string>());
    return std::string("expected a scalar value");
}

/// Integral doubles within the 53-bit exact window emit as integers so
/// completed specs read "36", not "36.0".
inline ordered_json double_to_json(double v) {
    if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) <= 9007199254740992.0)
        return ordered_json(static_cast<std::int64_t>(v));
    return ordered_json(v);
}

inline ordered_json scalar_to_json(const Scalar& s) {
    switch (s.kind()) {
        case Scalar::Kind::Null: return ordered_json(nullptr);
        case Scalar::Kind::Number: return double_to_json(s.number());
        case Scalar::Kind::Text: return ordered_json(s.text());
        case Scalar::Kind::Boolean: return ordered_json(s.boolean());
        case Scalar::Kind::Timestamp: return ordered_json(iso8601_text(s.timestamp_ms()));
    }
    return ordered_json(nullptr);
}

}  // namespace encgram

#endif  // ENCGRAM_JSON_UTIL_HPP
