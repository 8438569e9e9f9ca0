#ifndef ENCGRAM_ENCODING_HPP
#define ENCGRAM_ENCODING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "encgram/channel_def.hpp"

namespace encgram {

/// What kind of visual property a channel drives. Determines which def kinds
/// a channel accepts and which context defaults apply.
enum class ChannelType { X, Y, Numeric, Category, Color, Text };

/// Output value class an encoder produces for the channel.
enum class OutputKind { Number, Text, Boolean };

inline const char* channel_type_name(ChannelType t) {
    switch (t) {
        case ChannelType::X: return "X";
        case ChannelType::Y: return "Y";
        case ChannelType::Numeric: return "Numeric";
        case ChannelType::Category: return "Category";
        case ChannelType::Color: return "Color";
        case ChannelType::Text: return "Text";
    }
    return "?";
}

inline const char* output_kind_name(OutputKind k) {
    switch (k) {
        case OutputKind::Number: return "number";
        case OutputKind::Text: return "text";
        case OutputKind::Boolean: return "boolean";
    }
    return "?";
}

inline std::optional<ChannelType> parse_channel_type(const std::string& s) {
    if (s == "X") return ChannelType::X;
    if (s == "Y") return ChannelType::Y;
    if (s == "Numeric") return ChannelType::Numeric;
    if (s == "Category") return ChannelType::Category;
    if (s == "Color") return ChannelType::Color;
    if (s == "Text") return ChannelType::Text;
    return std::nullopt;
}

inline std::optional<OutputKind> parse_output_kind(const std::string& s) {
    if (s == "number") return OutputKind::Number;
    if (s == "text") return OutputKind::Text;
    if (s == "boolean") return OutputKind::Boolean;
    return std::nullopt;
}

/// The output class each channel type is constrained to (Color emits color
/// text, positions and sizes emit numbers); Category and Text default to
/// text but may be declared otherwise.
inline OutputKind default_output_kind(ChannelType t) {
    switch (t) {
        case ChannelType::X:
        case ChannelType::Y:
        case ChannelType::Numeric:
            return OutputKind::Number;
        case ChannelType::Category:
        case ChannelType::Color:
        case ChannelType::Text:
            return OutputKind::Text;
    }
    return OutputKind::Text;
}

/// One channel declared by a component author: type, output class,
/// multiplicity, and an optional default definition that makes the channel
/// optional in user specs.
struct ChannelConfigEntry {
    ChannelType channel_type = ChannelType::Text;
    OutputKind output = OutputKind::Text;
    bool multiple = false;
    std::optional<ChannelDef> default_def;

    friend bool operator==(const ChannelConfigEntry&, const ChannelConfigEntry&) = default;
};

/// The component author's channel declaration; induces the component-specific
/// grammar that specs are validated against. Channel order is the author's
/// declaration order.
class EncodingConfig {
public:
    using Entry = std::pair<std::string, ChannelConfigEntry>;

    void add(std::string name, ChannelConfigEntry entry) {
        entries_.emplace_back(std::move(name), std::move(entry));
    }

    const std::vector<Entry>& channels() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const ChannelConfigEntry* find(const std::string& name) const {
        for (const auto& [n, e] : entries_) {
            if (n == name) return &e;
        }
        return nullptr;
    }

    friend bool operator==(const EncodingConfig&, const EncodingConfig&) = default;

private:
    std::vector<Entry> entries_;
};

/// A user-supplied (possibly partial) encoding specification. `was_list`
/// remembers whether the document gave an array, which the validator needs
/// for the multiplicity check and serialization for round-tripping.
struct SpecEntry {
    std::vector<ChannelDef> defs;
    bool was_list = false;

    friend bool operator==(const SpecEntry&, const SpecEntry&) = default;
};

class EncodingSpec {
public:
    using Entry = std::pair<std::string, SpecEntry>;

    void add(std::string name, SpecEntry entry) {
        entries_.emplace_back(std::move(name), std::move(entry));
    }

    const std::vector<Entry>& channels() const { return entries_; }
    std::vector<Entry>& channels_mutable() { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const SpecEntry* find(const std::string& name) const {
        for (const auto& [n, e] : entries_) {
            if (n == name) return &e;
        }
        return nullptr;
    }

    friend bool operator==(const EncodingSpec&, const EncodingSpec&) = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace encgram

#endif  // ENCGRAM_ENCODING_HPP
