#ifndef ENCGRAM_FILL_HPP
#define ENCGRAM_FILL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "encgram/completed.hpp"
#include "encgram/encoding.hpp"

// The completion pass: expands a validated partial spec with inferred
// defaults. Fill is a pure function of (config, spec) -- never of any
// dataset -- so completion is stable and idempotent.

namespace encgram {

/// Scale type inferred when the user names none.
inline ScaleType infer_scale_type(FieldType field_type, ChannelType channel_type) {
    switch (field_type) {
        case FieldType::Quantitative: return ScaleType::Linear;
        case FieldType::Temporal: return ScaleType::Time;
        case FieldType::Ordinal:
        case FieldType::Nominal:
            break;
    }
    if (channel_type == ChannelType::X || channel_type == ChannelType::Y)
        return ScaleType::Band;
    return ScaleType::Ordinal;
}

/// Context-default ranges, applied when a from-context marker is never
/// resolved by the renderer: positional channels get the unit interval
/// (Y flipped for screen coordinates), Numeric the unit interval, Color a
/// sequential blue pair for continuous field types and a 10-color
/// categorical palette otherwise. Category channels have no sensible
/// default; the encoder reports them unresolved.
inline std::optional<std::vector<Scalar>> context_default_range(ChannelType channel_type,
                                                                FieldType field_type) {
    switch (channel_type) {
        case ChannelType::X:
        case ChannelType::Numeric:
            return std::vector<Scalar>{Scalar(0.0), Scalar(1.0)};
        case ChannelType::Y:
            return std::vector<Scalar>{Scalar(1.0), Scalar(0.0)};
        case ChannelType::Color:
            if (field_type == FieldType::Quantitative || field_type == FieldType::Temporal)
                return std::vector<Scalar>{Scalar("#f7fbff"), Scalar("#08306b")};
            return std::vector<Scalar>{Scalar("#1f77b4"), Scalar("#ff7f0e"), Scalar("#2ca02c"),
                                       Scalar("#d62728"), Scalar("#9467bd"), Scalar("#8c564b"),
                                       Scalar("#e377c2"), Scalar("#7f7f7f"), Scalar("#bcbd22"),
                                       Scalar("#17becf")};
        case ChannelType::Category:
        case ChannelType::Text:
            return std::nullopt;
    }
    return std::nullopt;
}

/// Completes one definition. Pre: def passed validation for this entry;
/// every branch below only adds defaults, never overwrites user input.
inline CompletedChannelDef fill_channel_def(const ChannelConfigEntry& entry,
                                            const ChannelDef& def) {
    if (const auto* v = std::get_if<ValueDef>(&def)) return CompletedValueDef{v->value};

    const FieldDef* f = as_field_def(def);
    const ScaleFieldDef* sf = as_scale_field_def(def);
    const auto* pf = std::get_if<PositionFieldDef>(&def);

    CompletedFieldDef out;
    out.field = f->field;
    out.field_type = sf && sf->type ? *sf->type : FieldType::Nominal;
    out.title = f->title ? *f->title : f->field;
    out.format = f->format ? *f->format : "";

    const bool positional =
        entry.channel_type == ChannelType::X || entry.channel_type == ChannelType::Y;

    if (entry.channel_type != ChannelType::Text) {
        CompletedScaleDef scale;
        const ScaleDef user = sf && sf->scale ? *sf->scale : ScaleDef{};
        scale.type = user.type ? *user.type : infer_scale_type(out.field_type, entry.channel_type);
        scale.domain = user.domain ? *user.domain : DomainSpec(FromData{});
        scale.range = user.range ? *user.range : RangeSpec(FromContext{});
        scale.nice = user.nice ? *user.nice
                               : (positional && out.field_type == FieldType::Quantitative);
        scale.clamp = user.clamp ? *user.clamp : false;
        scale.zero = user.zero ? *user.zero : false;
        scale.base = user.base ? *user.base : 10.0;
        scale.padding = user.padding ? *user.padding
                        : scale.type == ScaleType::Band   ? 0.1
                        : scale.type == ScaleType::Point  ? 0.5
                                                          : 0.0;
        out.scale = std::move(scale);
    }

    if (positional) {
        if (pf && pf->axis_suppressed) {
            out.axis_suppressed = true;
        } else {
            CompletedAxisDef axis;
            const AxisDef user = pf && pf->axis ? *pf->axis : AxisDef{};
            axis.orient = pf && pf->axis
                              ? user.orient
                              : (entry.channel_type == ChannelType::X ? Orient::Bottom
                                                                      : Orient::Left);
            axis.title = user.title ? *user.title : out.title;
            axis.tick_count = user.tick_count ? *user.tick_count : 5;
            axis.format = user.format ? *user.format : out.format;
            out.axis = std::move(axis);
        }
    }
    return out;
}

/// Expands a validated spec: every config channel becomes present (falling
/// back to the config default), multiple channels normalize to lists, and
/// each def runs through fill_channel_def. Pre: validate(config, spec).ok;
/// violating that is a caller contract error.
inline CompletedSpec fill_spec(const EncodingConfig& config, const EncodingSpec& spec) {
    CompletedSpec out;
    for (const auto& [name, entry] : config.channels()) {
        std::vector<ChannelDef> defs;
        if (const SpecEntry* given = spec.find(name)) {
            defs = given->defs;
        } else if (entry.default_def) {
            defs = {*entry.default_def};
        } else {
            throw std::logic_error("fill_spec requires a validated spec: channel \"" + name +
                                   "\" is missing and has no default");
        }
        CompletedEntry completed;
        completed.multiple = entry.multiple;
        completed.defs.reserve(defs.size());
        for (const ChannelDef& d : defs) completed.defs.push_back(fill_channel_def(entry, d));
        out.add(name, std::move(completed));
    }
    return out;
}

}  // namespace encgram

#endif  // ENCGRAM_FILL_HPP
