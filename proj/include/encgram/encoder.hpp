#ifndef ENCGRAM_ENCODER_HPP
#define ENCGRAM_ENCODER_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "encgram/channel_def.hpp"
#include "encgram/codec.hpp"
#include "encgram/completed.hpp"
#include "encgram/dataset.hpp"
#include "encgram/encoding.hpp"
#include "encgram/errors.hpp"
#include "encgram/fill.hpp"
#include "encgram/result.hpp"
#include "encgram/scale.hpp"
#include "encgram/validator.hpp"

// The runtime half of the grammar: validated, completed definitions become
// channel encoders that map dataset rows to output values.
//
// Two-phase contract: set_domain_from_dataset and set_range mutate and must
// run single-threaded; once every channel is resolved the encoder is
// read-only and the encode calls are safe to share across threads.

namespace encgram {

/// Encode fallback when the caller does not supply one.
inline Scalar default_fallback(OutputKind kind) {
    switch (kind) {
        case OutputKind::Number: return Scalar(0.0);
        case OutputKind::Text: return Scalar(std::string());
        case OutputKind::Boolean: return Scalar(false);
    }
    return Scalar{};
}

/// Renders a scalar as text by its value class. The empty pattern picks the
/// default formatter; text passes through and booleans print as literals.
inline std::string format_scalar(const Scalar& v, const std::string& pattern = std::string()) {
    switch (v.kind()) {
        case Scalar::Kind::Null: return std::string();
        case Scalar::Kind::Number: return format_number(v.number(), pattern);
        case Scalar::Kind::Text: return v.text();
        case Scalar::Kind::Boolean: return v.boolean() ? "true" : "false";
        case Scalar::Kind::Timestamp: return format_time(v.timestamp_ms(), pattern);
    }
    return std::string();
}

/// One completed definition bound to an optional executable scale.
///
/// Resolution: value definitions and scale-less (Text) field definitions are
/// born resolved. Scaled definitions resolve once domain and range are both
/// concrete; range markers resolve through the context defaults when the
/// channel has one. A data-derived domain that comes back empty (absent
/// field, all-null column) resolves without a scale and every encode takes
/// the fallback.
class ChannelEncoder {
public:
    ChannelEncoder(std::string channel_name, ChannelConfigEntry config, CompletedChannelDef def)
        : channel_name_(std::move(channel_name)),
          config_(std::move(config)),
          def_(std::move(def)) {
        if (const auto* f = scaled_field_def()) {
            if (const auto* d = std::get_if<std::vector<Scalar>>(&f->scale->domain))
                domain_ = *d;
            if (const auto* r = std::get_if<std::vector<Scalar>>(&f->scale->range))
                range_ = *r;
        }
        rebuild(false);
    }

    const std::string& channel_name() const { return channel_name_; }
    const ChannelConfigEntry& config() const { return config_; }
    const CompletedChannelDef& def() const { return def_; }
    bool resolved() const { return resolved_; }

    /// The executable scale, or null when the definition carries none or the
    /// data-derived domain was empty.
    const ConcreteScale* scale() const { return scale_ ? &*scale_ : nullptr; }

    /// Raw input lookup: the fixed value for value definitions, the field
    /// value (null when absent) otherwise. Works unresolved.
    Scalar get_value_from_datum(const Row& row) const {
        if (const auto* v = std::get_if<CompletedValueDef>(&def_)) return v->value;
        return get_field(row, std::get<CompletedFieldDef>(def_).field);
    }

    Scalar encode_datum(const Row& row) const {
        return encode_datum(row, default_fallback(config_.output));
    }

    /// Input row to output value. Null results (missing field, value outside
    /// a discrete domain, uncoercible value, empty derived domain) become the
    /// fallback.
    Scalar encode_datum(const Row& row, const Scalar& fallback) const {
        if (const auto* v = std::get_if<CompletedValueDef>(&def_)) return v->value;
        const auto& f = std::get<CompletedFieldDef>(def_);
        if (!f.scale) {
            const Scalar raw = get_field(row, f.field);
            if (raw.is_null()) return fallback;
            return Scalar(format_scalar(raw));
        }
        if (!resolved_)
            throw UnresolvedEncoderError("channel \"" + channel_name_ +
                                         "\" still carries domain or range markers");
        if (!scale_) return fallback;
        Scalar out = scale_->apply(get_value_from_datum(row));
        if (out.is_null()) return fallback;
        return out;
    }

    /// Text rendering of the raw value under the definition's format, used
    /// by tooltips and labels. Quantitative and temporal definitions coerce
    /// first; everything else formats by value class. Null gives "".
    std::string format_datum(const Row& row) const {
        const Scalar v = get_value_from_datum(row);
        if (v.is_null()) return std::string();
        if (std::holds_alternative<CompletedValueDef>(def_)) return format_scalar(v);
        const auto& f = std::get<CompletedFieldDef>(def_);
        if (f.field_type == FieldType::Quantitative) {
            if (const auto n = coerce_number(v)) return format_number(*n, f.format);
        } else if (f.field_type == FieldType::Temporal) {
            if (const auto t = coerce_timestamp(v)) return format_time(*t, f.format);
        }
        return format_scalar(v, f.format);
    }

private:
    friend class Encoder;

    const CompletedFieldDef* scaled_field_def() const {
        const auto* f = std::get_if<CompletedFieldDef>(&def_);
        return f && f->scale ? f : nullptr;
    }

    /// Recomputes the domain from data when the definition asks for it;
    /// user-given domains are never touched. Extent failures (absent field)
    /// leave an empty domain, and build errors on derived domains degrade to
    /// the scale-less resolved state rather than throwing mid-ingest.
    void resolve_domain_from_data(const Dataset& data) {
        const auto* f = scaled_field_def();
        if (!f || !std::holds_alternative<FromData>(f->scale->domain)) return;
        switch (f->field_type) {
            case FieldType::Quantitative: {
                const auto e = extent(data, f->field, ValueClass::Number);
                domain_ = e ? std::vector<Scalar>{e->first, e->second} : std::vector<Scalar>{};
                break;
            }
            case FieldType::Temporal: {
                const auto e = extent(data, f->field, ValueClass::Timestamp);
                domain_ = e ? std::vector<Scalar>{e->first, e->second} : std::vector<Scalar>{};
                break;
            }
            default:
                domain_ = unique_values(data, f->field);
                break;
        }
        rebuild(true);
    }

    void set_range(std::vector<Scalar> range) {
        if (!scaled_field_def()) return;
        range_ = std::move(range);
        rebuild(false);
    }

    /// Builds the scale when domain and range are settled. The range marker
    /// falls back to the channel's context default; channels without one
    /// (Category) stay unresolved until set_range.
    void rebuild(bool tolerate_build_errors) {
        const auto* f = scaled_field_def();
        if (!f) {
            resolved_ = true;
            return;
        }
        scale_.reset();
        resolved_ = false;
        if (!domain_) return;
        std::vector<Scalar> range;
        if (range_) {
            range = *range_;
        } else if (const auto ctx = context_default_range(config_.channel_type, f->field_type)) {
            range = *ctx;
        } else {
            return;
        }
        if (domain_->empty()) {
            resolved_ = true;
            return;
        }
        if (tolerate_build_errors) {
            try {
                scale_ = build_scale(*f->scale, *domain_, std::move(range));
            } catch (const DomainError&) {
                domain_->clear();
            }
        } else {
            scale_ = build_scale(*f->scale, *domain_, std::move(range));
        }
        resolved_ = true;
    }

    std::string channel_name_;
    ChannelConfigEntry config_;
    CompletedChannelDef def_;
    std::optional<std::vector<Scalar>> domain_;  ///< concrete domain, if settled
    std::optional<std::vector<Scalar>> range_;   ///< concrete range, if settled
    std::optional<ConcreteScale> scale_;
    bool resolved_ = false;
};

/// Channel encoders in config order; the key set always equals the config's
/// channel set (singleton lists unless the channel is multiple).
class Encoder {
public:
    const std::vector<std::pair<std::string, std::vector<ChannelEncoder>>>& channels() const {
        return channels_;
    }

    const std::vector<ChannelEncoder>* find(const std::string& name) const {
        for (const auto& [n, encoders] : channels_)
            if (n == name) return &encoders;
        return nullptr;
    }

    /// The channel's encoder list; throws UnknownChannelError when absent.
    const std::vector<ChannelEncoder>& at(const std::string& name) const {
        if (const auto* e = find(name)) return *e;
        throw UnknownChannelError("unknown channel \"" + name + "\"");
    }

    /// First encoder of a channel, the common case for non-multiple config.
    const ChannelEncoder& first(const std::string& name) const { return at(name).front(); }

    /// Derives every `from-data` domain from the dataset in one pass:
    /// quantitative fields take their numeric extent, temporal their
    /// timestamp extent, ordinal and nominal their distinct values in first
    /// appearance order. User-specified domains are untouched. The last call
    /// wins. Never throws; unusable columns degrade to fallback encodes.
    void set_domain_from_dataset(const Dataset& data) {
        for (auto& [name, encoders] : channels_)
            for (ChannelEncoder& ce : encoders) ce.resolve_domain_from_data(data);
    }

    /// Resolves or overrides a channel's range and rebuilds its scales.
    /// Scale-less channels accept the call as a no-op; unknown names throw
    /// UnknownChannelError.
    void set_range(const std::string& name, std::vector<Scalar> range) {
        for (auto& [n, encoders] : channels_) {
            if (n != name) continue;
            for (ChannelEncoder& ce : encoders) ce.set_range(range);
            return;
        }
        throw UnknownChannelError("unknown channel \"" + name + "\"");
    }

private:
    friend Result<Encoder, ValidationReport> create_encoder(const EncodingConfig&,
                                                            const EncodingSpec&);

    std::vector<std::pair<std::string, std::vector<ChannelEncoder>>> channels_;
};

/// Validates, completes, and instantiates. Scales whose domain and range are
/// already concrete (or context-defaulted) are built here; `from-data`
/// domains wait for set_domain_from_dataset. A failed validation returns the
/// report and no partial encoder. Construction is pure in (config, spec).
inline Result<Encoder, ValidationReport> create_encoder(const EncodingConfig& config,
                                                        const EncodingSpec& spec) {
    ValidationReport report = validate(config, spec);
    if (!report.ok()) return report;
    const CompletedSpec completed = fill_spec(config, spec);
    Encoder enc;
    for (const auto& [name, entry] : completed.channels()) {
        const ChannelConfigEntry* cfg = config.find(name);
        std::vector<ChannelEncoder> encoders;
        encoders.reserve(entry.defs.size());
        for (const CompletedChannelDef& def : entry.defs)
            encoders.emplace_back(name, *cfg, def);
        enc.channels_.emplace_back(name, std::move(encoders));
    }
    return enc;
}

}  // namespace encgram

#endif  // ENCGRAM_ENCODER_HPP
