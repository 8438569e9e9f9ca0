#ifndef ENCGRAM_COMPLETED_HPP
#define ENCGRAM_COMPLETED_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "encgram/channel_def.hpp"

// The filler's output model: every inferable field populated, markers left
// in place for values only the dataset or rendering context can supply.

namespace encgram {

/// Scale definition with no optionals remaining. `domain` may still be the
/// from-data marker and `range` the from-context marker; everything else is
/// concrete.
struct CompletedScaleDef {
    ScaleType type = ScaleType::Linear;
    DomainSpec domain = FromData{};
    RangeSpec range = FromContext{};
    bool nice = false;
    bool clamp = false;
    bool zero = false;
    double base = 10.0;    ///< meaningful for log only
    double padding = 0.0;  ///< meaningful for band/point only

    friend bool operator==(const CompletedScaleDef&, const CompletedScaleDef&) = default;
};

struct CompletedAxisDef {
    Orient orient = Orient::Bottom;
    std::string title;
    int tick_count = 5;
    std::string format;

    friend bool operator==(const CompletedAxisDef&, const CompletedAxisDef&) = default;
};

struct CompletedValueDef {
    Scalar value;

    friend bool operator==(const CompletedValueDef&, const CompletedValueDef&) = default;
};

/// Completed field definition. `scale` is absent exactly for Text channels;
/// `axis` is present only on X/Y channels that did not suppress it.
/// `axis_suppressed` records an explicit `"axis": false` so serialization can
/// round-trip the suppression.
struct CompletedFieldDef {
    std::string field;
    FieldType field_type = FieldType::Nominal;
    std::string title;
    std::string format;
    std::optional<CompletedScaleDef> scale;
    std::optional<CompletedAxisDef> axis;
    bool axis_suppressed = false;

    friend bool operator==(const CompletedFieldDef&, const CompletedFieldDef&) = default;
};

using CompletedChannelDef = std::variant<CompletedValueDef, CompletedFieldDef>;

/// Defs for one channel; always a list, singleton unless the channel is
/// `multiple`. The flag is copied from the config so serialization knows to
/// emit an array.
struct CompletedEntry {
    std::vector<CompletedChannelDef> defs;
    bool multiple = false;

    friend bool operator==(const CompletedEntry&, const CompletedEntry&) = default;
};

/// Filler output: one entry per config channel, in config declaration order.
class CompletedSpec {
public:
    using Entry = std::pair<std::string, CompletedEntry>;

    void add(std::string name, CompletedEntry entry) {
        entries_.emplace_back(std::move(name), std::move(entry));
    }

    const std::vector<Entry>& channels() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const CompletedEntry* find(const std::string& name) const {
        for (const auto& [n, e] : entries_) {
            if (n == name) return &e;
        }
        return nullptr;
    }

    friend bool operator==(const CompletedSpec&, const CompletedSpec&) = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace encgram

#endif  // ENCGRAM_COMPLETED_HPP
