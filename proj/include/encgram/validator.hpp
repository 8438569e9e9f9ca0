#ifndef ENCGRAM_VALIDATOR_HPP
#define ENCGRAM_VALIDATOR_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "encgram/channel_def.hpp"
#include "encgram/codec.hpp"
#include "encgram/color.hpp"
#include "encgram/encoding.hpp"
#include "encgram/fill.hpp"
#include "encgram/scalar.hpp"

// Spec-against-config validation. Issues are data, never exceptions, and
// the walk never fails fast: one report lists everything wrong.

namespace encgram {

enum class IssueCode {
    UnknownChannel,
    MissingRequiredChannel,
    MultiplicityMismatch,
    DefKindNotAllowed,
    BadAxisOrient,
    BadScaleTypeForFieldType,
    BadFieldShape,
};

inline const char* issue_code_name(IssueCode c) {
    switch (c) {
        case IssueCode::UnknownChannel: return "unknown_channel";
        case IssueCode::MissingRequiredChannel: return "missing_required_channel";
        case IssueCode::MultiplicityMismatch: return "multiplicity_mismatch";
        case IssueCode::DefKindNotAllowed: return "def_kind_not_allowed";
        case IssueCode::BadAxisOrient: return "bad_axis_orient";
        case IssueCode::BadScaleTypeForFieldType: return "bad_scale_type_for_field_type";
        case IssueCode::BadFieldShape: return "bad_field_shape";
    }
    return "?";
}

struct ValidationIssue {
    std::string path;
    IssueCode code = IssueCode::BadFieldShape;
    std::string message;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

/// The channel-type derivation table. Field defs are admitted wherever a
/// scaled def is: a FieldDef is a ScaleFieldDef awaiting fill.
inline std::vector<DefKind> allowed_def_kinds(ChannelType t) {
    switch (t) {
        case ChannelType::X:
        case ChannelType::Y:
            return {DefKind::PositionField, DefKind::ScaleField, DefKind::Field, DefKind::Value};
        case ChannelType::Numeric:
        case ChannelType::Category:
        case ChannelType::Color:
            return {DefKind::ScaleField, DefKind::Field, DefKind::Value};
        case ChannelType::Text:
            return {DefKind::Field, DefKind::Value};
    }
    return {};
}

inline bool def_kind_allowed(ChannelType t, DefKind k) {
    for (DefKind a : allowed_def_kinds(t))
        if (a == k) return true;
    return false;
}

namespace detail {

inline void check_pattern(const std::string& pattern, FieldType field_type,
                          const std::string& path, std::vector<ValidationIssue>& issues) {
    if (field_type == FieldType::Quantitative && !validate_number_pattern(pattern)) {
        issues.push_back({path, IssueCode::BadFieldShape,
                          "\"" + pattern + "\" is not a number pattern (expected \"\", \"d\", "
                          "\".Nf\" or \".N%\", optionally \",\"-prefixed)"});
    } else if (field_type == FieldType::Temporal && !validate_time_pattern(pattern)) {
        issues.push_back({path, IssueCode::BadFieldShape,
                          "\"" + pattern +
                              "\" is not a time pattern (tokens: %Y %m %d %H %M %S %b %a)"});
    }
}

inline bool numeric_domain_entry(const Scalar& v, ScaleType scale_type) {
    if (scale_type == ScaleType::Time) return coerce_timestamp(v).has_value();
    return coerce_number(v).has_value();
}

/// Shape checks that need the effective field and scale types: explicit
/// domain/range arity and element classes, padding/base placement, format
/// pattern validity.
inline void check_field_def_shape(const ChannelConfigEntry& entry, const ChannelDef& def,
                                  const std::string& path,
                                  std::vector<ValidationIssue>& issues) {
    const FieldDef* f = as_field_def(def);
    const ScaleFieldDef* sf = as_scale_field_def(def);
    const FieldType field_type = sf && sf->type ? *sf->type : FieldType::Nominal;

    if (f->format) check_pattern(*f->format, field_type, path + ".format", issues);

    if (const auto* pf = std::get_if<PositionFieldDef>(&def); pf && pf->axis && pf->axis->format)
        check_pattern(*pf->axis->format, field_type, path + ".axis.format", issues);

    if (!sf || !sf->scale) return;
    const ScaleDef& scale = *sf->scale;
    const ScaleType scale_type =
        scale.type ? *scale.type : infer_scale_type(field_type, entry.channel_type);

    if (scale.padding && !is_positional_discrete(scale_type))
        issues.push_back({path + ".scale.padding", IssueCode::BadFieldShape,
                          "padding applies to band and point scales only"});
    if (scale.base && scale_type != ScaleType::Log)
        issues.push_back({path + ".scale.base", IssueCode::BadFieldShape,
                          "base applies to log scales only"});

    if (scale.domain) {
        if (const auto* list = std::get_if<std::vector<Scalar>>(&*scale.domain)) {
            if (is_continuous(scale_type) || scale_type == ScaleType::Quantize) {
                bool shape_ok = list->size() == 2;
                for (const Scalar& v : *list)
                    shape_ok = shape_ok && numeric_domain_entry(v, scale_type);
                if (!shape_ok)
                    issues.push_back({path + ".scale.domain", IssueCode::BadFieldShape,
                                      scale_type == ScaleType::Time
                                          ? "a time domain needs exactly 2 timestamp entries"
                                          : "a continuous domain needs exactly 2 numeric entries"});
            } else if (list->empty()) {
                issues.push_back({path + ".scale.domain", IssueCode::BadFieldShape,
                                  "a discrete domain needs at least 1 entry"});
            }
        }
    }

    if (scale.range) {
        if (const auto* list = std::get_if<std::vector<Scalar>>(&*scale.range)) {
            if (is_continuous(scale_type)) {
                bool numbers = list->size() == 2;
                bool colors = list->size() == 2;
                for (const Scalar& v : *list) {
                    numbers = numbers && coerce_number(v).has_value();
                    colors = colors && v.is_text() && parse_color(v.text()).has_value();
                }
                if (!numbers && !colors)
                    issues.push_back(
                        {path + ".scale.range", IssueCode::BadFieldShape,
                         "a continuous range needs exactly 2 numbers or 2 parseable colors"});
            } else if (is_positional_discrete(scale_type)) {
                bool numbers = list->size() == 2;
                for (const Scalar& v : *list) numbers = numbers && coerce_number(v).has_value();
                if (!numbers)
                    issues.push_back({path + ".scale.range", IssueCode::BadFieldShape,
                                      "a band/point range needs exactly 2 numeric entries"});
            } else if (scale_type == ScaleType::Quantize) {
                if (list->size() < 2)
                    issues.push_back({path + ".scale.range", IssueCode::BadFieldShape,
                                      "a quantize range needs at least 2 entries"});
            } else if (list->empty()) {
                issues.push_back({path + ".scale.range", IssueCode::BadFieldShape,
                                  "an ordinal range needs at least 1 entry"});
            }
        }
    }
}

inline void check_scale_type_compat(const ChannelDef& def, const std::string& path,
                                    std::vector<ValidationIssue>& issues) {
    const ScaleFieldDef* sf = as_scale_field_def(def);
    if (!sf || !sf->scale || !sf->scale->type) return;
    const FieldType ft = sf->type ? *sf->type : FieldType::Nominal;
    const ScaleType st = *sf->scale->type;
    const char* needs = nullptr;
    if ((st == ScaleType::Ordinal || st == ScaleType::Band || st == ScaleType::Point) &&
        ft != FieldType::Ordinal && ft != FieldType::Nominal) {
        needs = "an ordinal or nominal field";
    } else if ((st == ScaleType::Log || st == ScaleType::Sqrt) &&
               ft != FieldType::Quantitative) {
        needs = "a quantitative field";
    } else if (st == ScaleType::Time && ft != FieldType::Temporal) {
        needs = "a temporal field";
    }
    if (needs) {
        issues.push_back({path + ".scale.type", IssueCode::BadScaleTypeForFieldType,
                          std::string("a ") + scale_type_name(st) + " scale requires " + needs});
    }
}

inline void check_axis_orient(ChannelType channel_type, const ChannelDef& def,
                              const std::string& path, std::vector<ValidationIssue>& issues) {
    const auto* pf = std::get_if<PositionFieldDef>(&def);
    if (!pf || !pf->axis) return;
    const Orient o = pf->axis->orient;
    const bool ok = channel_type == ChannelType::X ? (o == Orient::Top || o == Orient::Bottom)
                                                   : (o == Orient::Left || o == Orient::Right);
    if (!ok) {
        issues.push_back({path + ".axis.orient", IssueCode::BadAxisOrient,
                          std::string("orient \"") + orient_name(o) + "\" is not valid for " +
                              (channel_type == ChannelType::X ? "an X" : "a Y") + " channel"});
    }
}

}  // namespace detail

/// Checks a parsed spec against a config. Every problem is reported; ok()
/// means the filler's preconditions all hold.
inline ValidationReport validate(const EncodingConfig& config, const EncodingSpec& spec) {
    ValidationReport report;
    auto& issues = report.issues;

    for (const auto& [name, entry] : spec.channels()) {
        const std::string base = "encoding." + name;
        const ChannelConfigEntry* cfg = config.find(name);
        if (!cfg) {
            issues.push_back({base, IssueCode::UnknownChannel,
                              "the config declares no channel named \"" + name + "\""});
            continue;
        }
        if (entry.was_list && !cfg->multiple) {
            issues.push_back({base, IssueCode::MultiplicityMismatch,
                              "channel \"" + name + "\" is not multiple; give a single definition"});
        }
        for (std::size_t i = 0; i < entry.defs.size(); ++i) {
            const ChannelDef& def = entry.defs[i];
            const std::string path = entry.was_list ? base + "[" + std::to_string(i) + "]" : base;
            if (!def_kind_allowed(cfg->channel_type, def_kind(def))) {
                issues.push_back({path, IssueCode::DefKindNotAllowed,
                                  std::string(def_kind_name(def_kind(def))) +
                                      " is not allowed on a " +
                                      channel_type_name(cfg->channel_type) + " channel"});
                continue;
            }
            if (def_kind(def) == DefKind::Value) continue;
            detail::check_axis_orient(cfg->channel_type, def, path, issues);
            detail::check_scale_type_compat(def, path, issues);
            detail::check_field_def_shape(*cfg, def, path, issues);
        }
    }

    for (const auto& [name, entry] : config.channels()) {
        if (entry.default_def || spec.find(name)) continue;
        issues.push_back({"encoding." + name, IssueCode::MissingRequiredChannel,
                          "channel \"" + name + "\" is required and has no definition"});
    }

    return report;
}

}  // namespace encgram

#endif  // ENCGRAM_VALIDATOR_HPP
