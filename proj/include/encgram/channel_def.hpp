#ifndef ENCGRAM_CHANNEL_DEF_HPP
#define ENCGRAM_CHANNEL_DEF_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "encgram/scalar.hpp"

namespace encgram {

/// Data-semantics tag of a field; drives scale and formatter inference.
enum class FieldType { Quantitative, Ordinal, Temporal, Nominal };

enum class ScaleType { Linear, Log, Sqrt, Time, Ordinal, Band, Point, Quantize };

enum class Orient { Top, Bottom, Left, Right };

inline const char* field_type_name(FieldType t) {
    switch (t) {
        case FieldType::Quantitative: return "quantitative";
        case FieldType::Ordinal: return "ordinal";
        case FieldType::Temporal: return "temporal";
        case FieldType::Nominal: return "nominal";
    }
    return "?";
}

inline std::optional<FieldType> parse_field_type(const std::string& s) {
    if (s == "quantitative") return FieldType::Quantitative;
    if (s == "ordinal") return FieldType::Ordinal;
    if (s == "temporal") return FieldType::Temporal;
    if (s == "nominal") return FieldType::Nominal;
    return std::nullopt;
}

inline const char* scale_type_name(ScaleType t) {
    switch (t) {
        case ScaleType::Linear: return "linear";
        case ScaleType::Log: return "log";
        case ScaleType::Sqrt: return "sqrt";
        case ScaleType::Time: return "time";
        case ScaleType::Ordinal: return "ordinal";
        case ScaleType::Band: return "band";
        case ScaleType::Point: return "point";
        case ScaleType::Quantize: return "quantize";
    }
    return "?";
}

inline std::optional<ScaleType> parse_scale_type(const std::string& s) {
    if (s == "linear") return ScaleType::Linear;
    if (s == "log") return ScaleType::Log;
    if (s == "sqrt") return ScaleType::Sqrt;
    if (s == "time") return ScaleType::Time;
    if (s == "ordinal") return ScaleType::Ordinal;
    if (s == "band") return ScaleType::Band;
    if (s == "point") return ScaleType::Point;
    if (s == "quantize") return ScaleType::Quantize;
    return std::nullopt;
}

inline const char* orient_name(Orient o) {
    switch (o) {
        case Orient::Top: return "top";
        case Orient::Bottom: return "bottom";
        case Orient::Left: return "left";
        case Orient::Right: return "right";
    }
    return "?";
}

inline std::optional<Orient> parse_orient(const std::string& s) {
    if (s == "top") return Orient::Top;
    if (s == "bottom") return Orient::Bottom;
    if (s == "left") return Orient::Left;
    if (s == "right") return Orient::Right;
    return std::nullopt;
}

inline bool is_continuous(ScaleType t) {
    return t == ScaleType::Linear || t == ScaleType::Log || t == ScaleType::Sqrt ||
           t == ScaleType::Time;
}

inline bool is_discrete(ScaleType t) {
    return t == ScaleType::Ordinal || t == ScaleType::Band || t == ScaleType::Point;
}

inline bool is_positional_discrete(ScaleType t) {
    return t == ScaleType::Band || t == ScaleType::Point;
}

/// Marker: resolve the domain from the dataset (extent / unique values).
struct FromData {
    friend bool operator==(const FromData&, const FromData&) = default;
};

/// Marker: resolve the range from rendering context (pixels, palette).
struct FromContext {
    friend bool operator==(const FromContext&, const FromContext&) = default;
};

using DomainSpec = std::variant<FromData, std::vector<Scalar>>;
using RangeSpec = std::variant<FromContext, std::vector<Scalar>>;

struct ScaleDef {
    std::optional<ScaleType> type;
    std::optional<DomainSpec> domain;
    std::optional<RangeSpec> range;
    std::optional<bool> nice;
    std::optional<bool> clamp;
    std::optional<bool> zero;
    std::optional<double> base;     // log only
    std::optional<double> padding;  // band/point only, in [0,1]

    friend bool operator==(const ScaleDef&, const ScaleDef&) = default;
};

struct AxisDef {
    Orient orient = Orient::Bottom;
    std::optional<std::string> title;
    std::optional<int> tick_count;
    std::optional<std::string> format;

    friend bool operator==(const AxisDef&, const AxisDef&) = default;
};

/// Fixed value: the channel emits `value` for every datum.
struct ValueDef {
    Scalar value;

    friend bool operator==(const ValueDef&, const ValueDef&) = default;
};

/// Raw field lookup, with optional display format and title.
struct FieldDef {
    std::string field;
    std::optional<std::string> format;
    std::optional<std::string> title;

    friend bool operator==(const FieldDef&, const FieldDef&) = default;
};

/// Field run through a scale. `type` is the field type; when absent the
/// filler defaults it to nominal.
struct ScaleFieldDef : FieldDef {
    std::optional<FieldType> type;
    std::optional<ScaleDef> scale;

    friend bool operator==(const ScaleFieldDef&, const ScaleFieldDef&) = default;
};

/// Positional field: may additionally carry an axis. `axis_suppressed` records
/// an explicit `"axis": false` in the document ("render no axis").
struct PositionFieldDef : ScaleFieldDef {
    std::optional<AxisDef> axis;
    bool axis_suppressed = false;

    friend bool operator==(const PositionFieldDef&, const PositionFieldDef&) = default;
};

using ChannelDef = std::variant<ValueDef, FieldDef, ScaleFieldDef, PositionFieldDef>;

enum class DefKind { Value, Field, ScaleField, PositionField };

inline DefKind def_kind(const ChannelDef& def) {
    return static_cast<DefKind>(def.index());
}

inline const char* def_kind_name(DefKind k) {
    switch (k) {
        case DefKind::Value: return "ValueDef";
        case DefKind::Field: return "FieldDef";
        case DefKind::ScaleField: return "ScaleFieldDef";
        case DefKind::PositionField: return "PositionFieldDef";
    }
    return "?";
}

/// Field-def facets shared by the three field kinds, or nullptr for ValueDef.
inline const FieldDef* as_field_def(const ChannelDef& def) {
    if (const auto* f = std::get_if<FieldDef>(&def)) return f;
    if (const auto* s = std::get_if<ScaleFieldDef>(&def)) return s;
    if (const auto* p = std::get_if<PositionFieldDef>(&def)) return p;
    return nullptr;
}

inline const ScaleFieldDef* as_scale_field_def(const ChannelDef& def) {
    if (const auto* s = std::get_if<ScaleFieldDef>(&def)) return s;
    if (const auto* p = std::get_if<PositionFieldDef>(&def)) return p;
    return nullptr;
}

}  // namespace encgram

#endif  // ENCGRAM_CHANNEL_DEF_HPP
