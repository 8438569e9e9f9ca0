#ifndef ENCGRAM_SPEC_IO_HPP
#define ENCGRAM_SPEC_IO_HPP

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "encgram/channel_def.hpp"
#include "encgram/completed.hpp"
#include "encgram/encoding.hpp"
#include "encgram/errors.hpp"
#include "encgram/json_util.hpp"
#include "encgram/result.hpp"
#include "encgram/validator.hpp"

// Document ingestion and emission for configs and specs. Parsing is strict:
// unknown keys, bad enum members and shape mistakes are errors with a path,
// because silent typos are the user mistake this grammar exists to catch.

namespace encgram {

namespace detail {

/// Sorted-key JSON for canonical, byte-deterministic emission.
using sorted_json = nlohmann::json;

inline sorted_json scalar_to_sorted_json(const Scalar& s) {
    switch (s.kind()) {
        case Scalar::Kind::Null: return sorted_json(nullptr);
        case Scalar::Kind::Number: {
            const double v = s.number();
            if (std::floor(v) == v && std::fabs(v) <= 9007199254740992.0)
                return sorted_json(static_cast<std::int64_t>(v));
            return sorted_json(v);
        }
        case Scalar::Kind::Text: return sorted_json(s.text());
        case Scalar::Kind::Boolean: return sorted_json(s.boolean());
        case Scalar::Kind::Timestamp: return sorted_json(iso8601_text(s.timestamp_ms()));
    }
    return sorted_json(nullptr);
}

inline bool valid_channel_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline Result<std::string, ParseError> expect_string(const ordered_json& j,
                                                     const std::string& path) {
    if (!j.is_string()) return ParseError{path, "expected a string"};
    return j.get<std::string>();
}

inline Result<bool, ParseError> expect_boolean(const ordered_json& j, const std::string& path) {
    if (!j.is_boolean()) return ParseError{path, "expected true or false"};
    return j.get<bool>();
}

inline Result<std::vector<Scalar>, ParseError> parse_scalar_list(const ordered_json& j,
                                                                 const std::string& path) {
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto s = json_to_scalar(j[i]);
        if (!s) return ParseError{path + "[" + std::to_string(i) + "]", s.error()};
        out.push_back(std::move(s.value()));
    }
    return out;
}

inline Result<ScaleDef, ParseError> parse_scale_def(const ordered_json& j,
                                                    const std::string& path) {
    if (!j.is_object()) return ParseError{path, "scale must be an object"};
    ScaleDef out;
    for (const auto& [key, value] : j.items()) {
        const std::string kpath = path + "." + key;
        if (key == "type") {
            auto s = expect_string(value, kpath);
            if (!s) return s.error();
            const auto t = parse_scale_type(s.value());
            if (!t) return ParseError{kpath, "unknown scale type \"" + s.value() + "\""};
            out.type = *t;
        } else if (key == "domain") {
            if (value.is_string()) {
                if (value.get<std::string>() != "from-data")
                    return ParseError{kpath, "domain must be an array or \"from-data\""};
                out.domain = FromData{};
            } else if (value.is_array()) {
                auto list = parse_scalar_list(value, kpath);
                if (!list) return list.error();
                out.domain = std::move(list.value());
            } else {
                return ParseError{kpath, "domain must be an array or \"from-data\""};
            }
        } else if (key == "range") {
            if (value.is_string()) {
                if (value.get<std::string>() != "from-context")
                    return ParseError{kpath, "range must be an array or \"from-context\""};
                out.range = FromContext{};
            } else if (value.is_array()) {
                auto list = parse_scalar_list(value, kpath);
                if (!list) return list.error();
                out.range = std::move(list.value());
            } else {
                return ParseError{kpath, "range must be an array or \"from-context\""};
            }
        } else if (key == "nice" || key == "clamp" || key == "zero") {
            auto b = expect_boolean(value, kpath);
            if (!b) return b.error();
            (key == "nice" ? out.nice : key == "clamp" ? out.clamp : out.zero) = b.value();
        } else if (key == "base") {
            if (!value.is_number()) return ParseError{kpath, "base must be a number"};
            const double v = value.get<double>();
            if (!(v > 0.0) || v == 1.0)
                return ParseError{kpath, "log base must be positive and not 1"};
            out.base = v;
        } else if (key == "padding") {
            if (!value.is_number()) return ParseError{kpath, "padding must be a number"};
            const double v = value.get<double>();
            if (!(v >= 0.0 && v <= 1.0)) return ParseError{kpath, "padding must be within [0, 1]"};
            out.padding = v;
        } else {
            return ParseError{kpath, "unknown key"};
        }
    }
    return out;
}

inline Result<AxisDef, ParseError> parse_axis_def(const ordered_json& j,
                                                  const std::string& path) {
    AxisDef out;
    bool has_orient = false;
    for (const auto& [key, value] : j.items()) {
        const std::string kpath = path + "." + key;
        if (key == "orient") {
            auto s = expect_string(value, kpath);
            if (!s) return s.error();
            const auto o = parse_orient(s.value());
            if (!o) return ParseError{kpath, "unknown orient \"" + s.value() + "\""};
            out.orient = *o;
            has_orient = true;
        } else if (key == "title") {
            auto s = expect_string(value, kpath);
            if (!s) return s.error();
            out.title = std::move(s.value());
        } else if (key == "format") {
            auto s = expect_string(value, kpath);
            if (!s) return s.error();
            out.format = std::move(s.value());
        } else if (key == "tickCount") {
            if (!value.is_number() || value.get<double>() != std::floor(value.get<double>()))
                return ParseError{kpath, "tickCount must be an integer"};
            const double v = value.get<double>();
            if (v < 1.0 || v > 1000.0)
                return ParseError{kpath, "tickCount must be between 1 and 1000"};
            out.tick_count = static_cast<int>(v);
        } else {
            return ParseError{kpath, "unknown key"};
        }
    }
    if (!has_orient) return ParseError{path, "axis requires an \"orient\""};
    return out;
}

}  // namespace detail

/// Parses one channel definition. The union tag is decided by shape alone:
/// `value` wins (and admits no siblings), `axis` makes a positional def,
/// `type`/`scale` a scaled one, bare `field` a plain field def.
inline Result<ChannelDef, ParseError> parse_channel_def(const ordered_json& j,
                                                        const std::string& path) {
    if (!j.is_object()) return ParseError{path, "a channel definition must be an object"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "value" && key != "field" && key != "format" && key != "title" &&
            key != "type" && key != "scale" && key != "axis")
            return ParseError{path + "." + key, "unknown key"};
    }

    if (j.contains("value")) {
        if (j.size() != 1)
            return ParseError{path, "a value definition admits no sibling keys"};
        auto s = json_to_scalar(j["value"]);
        if (!s) return ParseError{path + ".value", s.error()};
        if (s.value().is_null()) return ParseError{path + ".value", "value may not be null"};
        return ChannelDef(ValueDef{std::move(s.value())});
    }

    if (!j.contains("field"))
        return ParseError{path, "a definition needs either \"value\" or \"field\""};
    FieldDef base;
    {
        auto s = detail::expect_string(j["field"], path + ".field");
        if (!s) return s.error();
        if (s.value().empty()) return ParseError{path + ".field", "field may not be empty"};
        base.field = std::move(s.value());
    }
    if (j.contains("format")) {
        auto s = detail::expect_string(j["format"], path + ".format");
        if (!s) return s.error();
        base.format = std::move(s.value());
    }
    if (j.contains("title")) {
        auto s = detail::expect_string(j["title"], path + ".title");
        if (!s) return s.error();
        base.title = std::move(s.value());
    }

    std::optional<FieldType> field_type;
    if (j.contains("type")) {
        auto s = detail::expect_string(j["type"], path + ".type");
        if (!s) return s.error();
        const auto t = parse_field_type(s.value());
        if (!t) return ParseError{path + ".type", "unknown field type \"" + s.value() + "\""};
        field_type = *t;
    }
    std::optional<ScaleDef> scale;
    if (j.contains("scale")) {
        auto s = detail::parse_scale_def(j["scale"], path + ".scale");
        if (!s) return s.error();
        scale = std::move(s.value());
    }

    if (j.contains("axis")) {
        PositionFieldDef out;
        static_cast<FieldDef&>(out) = std::move(base);
        out.type = field_type;
        out.scale = std::move(scale);
        const ordered_json& aj = j["axis"];
        if (aj.is_boolean()) {
            if (aj.get<bool>()) return ParseError{path + ".axis", "axis must be an object or false"};
            out.axis_suppressed = true;
        } else if (aj.is_object()) {
            auto a = detail::parse_axis_def(aj, path + ".axis");
            if (!a) return a.error();
            out.axis = std::move(a.value());
        } else {
            return ParseError{path + ".axis", "axis must be an object or false"};
        }
        return ChannelDef(std::move(out));
    }

    if (field_type || scale) {
        ScaleFieldDef out;
        static_cast<FieldDef&>(out) = std::move(base);
        out.type = field_type;
        out.scale = std::move(scale);
        return ChannelDef(std::move(out));
    }
    return ChannelDef(std::move(base));
}

/// Parses a spec document: an object of channel name -> definition or
/// definition list. Never throws on arbitrary bytes.
inline Result<EncodingSpec, ParseError> parse_spec(std::string_view text) {
    auto doc = parse_json_strict(text);
    if (!doc) return doc.error();
    const ordered_json& root = doc.value();
    if (!root.is_object()) return ParseError{"", "a spec must be a JSON object"};
    EncodingSpec spec;
    for (const auto& [name, value] : root.items()) {
        SpecEntry entry;
        if (value.is_array()) {
            entry.was_list = true;
            if (value.empty()) return ParseError{name, "a definition list may not be empty"};
            for (std::size_t i = 0; i < value.size(); ++i) {
                auto def = parse_channel_def(value[i], name + "[" + std::to_string(i) + "]");
                if (!def) return def.error();
                entry.defs.push_back(std::move(def.value()));
            }
        } else {
            auto def = parse_channel_def(value, name);
            if (!def) return def.error();
            entry.defs.push_back(std::move(def.value()));
        }
        spec.add(name, std::move(entry));
    }
    return spec;
}

/// Parses a config document: {"channels": {name: {type, output?, multiple?,
/// default?}}}. Default definitions are checked against the channel's
/// derivation row here, so a config that parses is a config that works.
inline Result<EncodingConfig, ParseError> parse_config(std::string_view text) {
    auto doc = parse_json_strict(text);
    if (!doc) return doc.error();
    const ordered_json& root = doc.value();
    if (!root.is_object()) return ParseError{"", "a config must be a JSON object"};
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (key != "channels") return ParseError{key, "unknown key"};
    }
    if (!root.contains("channels") || !root["channels"].is_object())
        return ParseError{"channels", "a config requires a \"channels\" object"};

    EncodingConfig config;
    for (const auto& [name, ej] : root["channels"].items()) {
        const std::string base = "channels." + name;
        if (!detail::valid_channel_name(name))
            return ParseError{base,
                              "channel names must match [A-Za-z][A-Za-z0-9_]*"};
        if (!ej.is_object()) return ParseError{base, "a channel entry must be an object"};
        for (const auto& [key, value] : ej.items()) {
            (void)value;
            if (key != "type" && key != "output" && key != "multiple" && key != "default")
                return ParseError{base + "." + key, "unknown key"};
        }
        if (!ej.contains("type")) return ParseError{base, "a channel entry requires a \"type\""};

        ChannelConfigEntry entry;
        {
            auto s = detail::expect_string(ej["type"], base + ".type");
            if (!s) return s.error();
            const auto t = parse_channel_type(s.value());
            if (!t) return ParseError{base + ".type", "unknown channel type \"" + s.value() + "\""};
            entry.channel_type = *t;
        }
        entry.output = default_output_kind(entry.channel_type);
        if (ej.contains("output")) {
            auto s = detail::expect_string(ej["output"], base + ".output");
            if (!s) return s.error();
            const auto k = parse_output_kind(s.value());
            if (!k) return ParseError{base + ".output", "unknown output \"" + s.value() + "\""};
            entry.output = *k;
            const ChannelType t = entry.channel_type;
            if (t == ChannelType::Color && entry.output != OutputKind::Text)
                return ParseError{base + ".output", "Color channels emit text"};
            if ((t == ChannelType::X || t == ChannelType::Y || t == ChannelType::Numeric) &&
                entry.output != OutputKind::Number)
                return ParseError{base + ".output", "positional and Numeric channels emit numbers"};
        }
        if (ej.contains("multiple")) {
            auto b = detail::expect_boolean(ej["multiple"], base + ".multiple");
            if (!b) return b.error();
            entry.multiple = b.value();
        }
        if (ej.contains("default")) {
            const std::string dpath = base + ".default";
            auto def = parse_channel_def(ej["default"], dpath);
            if (!def) return def.error();
            if (!def_kind_allowed(entry.channel_type, def_kind(def.value())))
                return ParseError{dpath, std::string(def_kind_name(def_kind(def.value()))) +
                                             " is not allowed on a " +
                                             channel_type_name(entry.channel_type) + " channel"};
            if (def_kind(def.value()) != DefKind::Value) {
                std::vector<ValidationIssue> issues;
                detail::check_axis_orient(entry.channel_type, def.value(), dpath, issues);
                detail::check_scale_type_compat(def.value(), dpath, issues);
                detail::check_field_def_shape(entry, def.value(), dpath, issues);
                if (!issues.empty()) return ParseError{issues[0].path, issues[0].message};
            }
            entry.default_def = std::move(def.value());
        }
        config.add(name, std::move(entry));
    }
    return config;
}

namespace detail {

inline sorted_json scale_def_to_json(const ScaleDef& s) {
    sorted_json out = sorted_json::object();
    if (s.type) out["type"] = scale_type_name(*s.type);
    if (s.domain) {
        if (std::holds_alternative<FromData>(*s.domain)) {
            out["domain"] = "from-data";
        } else {
            sorted_json list = sorted_json::array();
            for (const Scalar& v : std::get<std::vector<Scalar>>(*s.domain))
                list.push_back(scalar_to_sorted_json(v));
            out["domain"] = std::move(list);
        }
    }
    if (s.range) {
        if (std::holds_alternative<FromContext>(*s.range)) {
            out["range"] = "from-context";
        } else {
            sorted_json list = sorted_json::array();
            for (const Scalar& v : std::get<std::vector<Scalar>>(*s.range))
                list.push_back(scalar_to_sorted_json(v));
            out["range"] = std::move(list);
        }
    }
    if (s.nice) out["nice"] = *s.nice;
    if (s.clamp) out["clamp"] = *s.clamp;
    if (s.zero) out["zero"] = *s.zero;
    if (s.base) out["base"] = scalar_to_sorted_json(Scalar(*s.base));
    if (s.padding) out["padding"] = scalar_to_sorted_json(Scalar(*s.padding));
    return out;
}

inline sorted_json axis_def_to_json(const AxisDef& a) {
    sorted_json out = sorted_json::object();
    out["orient"] = orient_name(a.orient);
    if (a.title) out["title"] = *a.title;
    if (a.tick_count) out["tickCount"] = *a.tick_count;
    if (a.format) out["format"] = *a.format;
    return out;
}

inline sorted_json channel_def_to_json(const ChannelDef& def) {
    if (const auto* v = std::get_if<ValueDef>(&def)) {
        sorted_json out = sorted_json::object();
        out["value"] = scalar_to_sorted_json(v->value);
        return out;
    }
    sorted_json out = sorted_json::object();
    const FieldDef* f = as_field_def(def);
    out["field"] = f->field;
    if (f->format) out["format"] = *f->format;
    if (f->title) out["title"] = *f->title;
    if (const ScaleFieldDef* sf = as_scale_field_def(def)) {
        if (sf->type) out["type"] = field_type_name(*sf->type);
        if (sf->scale) out["scale"] = scale_def_to_json(*sf->scale);
    }
    if (const auto* pf = std::get_if<PositionFieldDef>(&def)) {
        if (pf->axis_suppressed) {
            out["axis"] = false;
        } else if (pf->axis) {
            out["axis"] = axis_def_to_json(*pf->axis);
        }
    }
    return out;
}

inline sorted_json completed_scale_to_json(const CompletedScaleDef& s) {
    sorted_json out = sorted_json::object();
    out["type"] = scale_type_name(s.type);
    if (std::holds_alternative<FromData>(s.domain)) {
        out["domain"] = "from-data";
    } else {
        sorted_json list = sorted_json::array();
        for (const Scalar& v : std::get<std::vector<Scalar>>(s.domain))
            list.push_back(scalar_to_sorted_json(v));
        out["domain"] = std::move(list);
    }
    if (std::holds_alternative<FromContext>(s.range)) {
        out["range"] = "from-context";
    } else {
        sorted_json list = sorted_json::array();
        for (const Scalar& v : std::get<std::vector<Scalar>>(s.range))
            list.push_back(scalar_to_sorted_json(v));
        out["range"] = std::move(list);
    }
    out["nice"] = s.nice;
    out["clamp"] = s.clamp;
    out["zero"] = s.zero;
    if (s.type == ScaleType::Log) out["base"] = scalar_to_sorted_json(Scalar(s.base));
    if (is_positional_discrete(s.type)) out["padding"] = scalar_to_sorted_json(Scalar(s.padding));
    return out;
}

/// Completed defs re-enter the parser on round trips, so emission respects
/// the derivation table: Text-channel defs stay plain field defs (no type,
/// no scale) and only X/Y defs carry an axis key (object, or false when
/// suppressed; fill sets exactly one of the two on positional field defs).
inline sorted_json completed_def_to_json(const CompletedChannelDef& def) {
    if (const auto* v = std::get_if<CompletedValueDef>(&def)) {
        sorted_json out = sorted_json::object();
        out["value"] = scalar_to_sorted_json(v->value);
        return out;
    }
    const auto& f = std::get<CompletedFieldDef>(def);
    sorted_json out = sorted_json::object();
    out["field"] = f.field;
    out["title"] = f.title;
    out["format"] = f.format;
    if (f.scale) {
        out["type"] = field_type_name(f.field_type);
        out["scale"] = completed_scale_to_json(*f.scale);
    }
    if (f.axis) {
        sorted_json axis = sorted_json::object();
        axis["orient"] = orient_name(f.axis->orient);
        axis["title"] = f.axis->title;
        axis["tickCount"] = f.axis->tick_count;
        axis["format"] = f.axis->format;
        out["axis"] = std::move(axis);
    } else if (f.axis_suppressed) {
        out["axis"] = false;
    }
    return out;
}

}  // namespace detail

/// Canonical emission: sorted keys, two-space indentation; two equal specs
/// serialize byte-identically.
inline std::string serialize_spec(const EncodingSpec& spec) {
    detail::sorted_json root = detail::sorted_json::object();
    for (const auto& [name, entry] : spec.channels()) {
        if (entry.was_list) {
            detail::sorted_json list = detail::sorted_json::array();
            for (const ChannelDef& d : entry.defs)
                list.push_back(detail::channel_def_to_json(d));
            root[name] = std::move(list);
        } else {
            root[name] = detail::channel_def_to_json(entry.defs.front());
        }
    }
    return root.dump(2);
}

inline std::string serialize_spec(const CompletedSpec& spec) {
    detail::sorted_json root = detail::sorted_json::object();
    for (const auto& [name, entry] : spec.channels()) {
        if (entry.multiple) {
            detail::sorted_json list = detail::sorted_json::array();
            for (const CompletedChannelDef& d : entry.defs)
                list.push_back(detail::completed_def_to_json(d));
            root[name] = std::move(list);
        } else {
            root[name] = detail::completed_def_to_json(entry.defs.front());
        }
    }
    return root.dump(2);
}

}  // namespace encgram

#endif  // ENCGRAM_SPEC_IO_HPP
