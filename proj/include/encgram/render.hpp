#ifndef ENCGRAM_RENDER_HPP
#define ENCGRAM_RENDER_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "encgram/encoder.hpp"
#include "encgram/svg.hpp"

// Two demo renderers proving the author-side workflow: a flow-layout word
// cloud and a single-axis bar chart. Both are pure functions of
// (spec, data, width, height) and emit byte-deterministic SVG.

namespace encgram {

/// Well-formed SVG 1.1 text, UTF-8, no external references.
struct SvgDocument {
    std::string text;

    bool operator==(const SvgDocument&) const = default;
};

/// Channel set of the demo word cloud: color and fontSize drive presentation
/// attributes, text supplies content (the one required channel), tooltip
/// accepts a list of descriptive fields.
inline EncodingConfig builtin_wordcloud_config() {
    EncodingConfig config;
    config.add("color", {ChannelType::Color, OutputKind::Text, false,
                         ChannelDef(ValueDef{Scalar("#000000")})});
    config.add("fontSize", {ChannelType::Numeric, OutputKind::Number, false,
                            ChannelDef(ValueDef{Scalar(14.0)})});
    config.add("text", {ChannelType::Text, OutputKind::Text, false, std::nullopt});
    config.add("tooltip", {ChannelType::Text, OutputKind::Text, true,
                           ChannelDef(ValueDef{Scalar(std::string())})});
    return config;
}

/// Channel set of the demo bar chart: positional x and y are required,
/// fill defaults to steel blue.
inline EncodingConfig builtin_barchart_config() {
    EncodingConfig config;
    config.add("x", {ChannelType::X, OutputKind::Number, false, std::nullopt});
    config.add("y", {ChannelType::Y, OutputKind::Number, false, std::nullopt});
    config.add("fill", {ChannelType::Color, OutputKind::Text, false,
                        ChannelDef(ValueDef{Scalar("#4682b4")})});
    config.add("tooltip", {ChannelType::Text, OutputKind::Text, true,
                           ChannelDef(ValueDef{Scalar(std::string())})});
    return config;
}

/// Channel-to-SVG-attribute rows for the word cloud. Extending the renderer
/// with a new presentation channel means one config.add plus one row here.
inline std::vector<std::pair<std::string, std::string>> builtin_wordcloud_attributes() {
    return {{"color", "fill"}, {"fontSize", "font-size"}};
}

namespace detail {

inline std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

/// Joined tooltip content: field entries as "title: formatted", value
/// entries bare, empty renderings dropped. Empty result means no <title>.
inline std::string tooltip_text(const Encoder& enc, const Row& row) {
    const auto* tips = enc.find("tooltip");
    if (!tips) return std::string();
    std::string out;
    for (const ChannelEncoder& ce : *tips) {
        const std::string formatted = ce.format_datum(row);
        if (formatted.empty()) continue;
        if (!out.empty()) out += "; ";
        if (const auto* f = std::get_if<CompletedFieldDef>(&ce.def()))
            out += f->title + ": " + formatted;
        else
            out += formatted;
    }
    return out;
}

inline std::string attribute_value_text(const Scalar& v) {
    if (v.is_number()) return fmt3(v.number());
    return format_scalar(v);
}

}  // namespace detail

/// One <g> per axis: a domain line spanning [0, pixel_length] along the
/// axis, 6px tick marks, labels 9px out formatted with the axis format, and
/// an optional title 30px out. Coordinates are local to the axis line
/// (perpendicular offset 0); callers place the group with a transform.
/// Band ticks sit at band centers; ticks without a numeric position are
/// skipped.
inline std::string render_axis(const ConcreteScale& scale, const CompletedAxisDef& axis,
                               double pixel_length) {
    const bool vertical = axis.orient == Orient::Left || axis.orient == Orient::Right;
    const double out_sign = (axis.orient == Orient::Left || axis.orient == Orient::Top) ? -1.0 : 1.0;
    const char* anchor = vertical ? (axis.orient == Orient::Left ? "end" : "start") : "middle";
    const char* dy = vertical ? "0.32em" : (axis.orient == Orient::Bottom ? "0.71em" : "0em");
    const std::string font = " font-size=\"10\" font-family=\"sans-serif\" fill=\"#000\"";

    std::string out = "<g>";
    if (vertical)
        out += "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" + fmt3(pixel_length) +
               "\" stroke=\"#000\"/>";
    else
        out += "<line x1=\"0\" y1=\"0\" x2=\"" + fmt3(pixel_length) +
               "\" y2=\"0\" stroke=\"#000\"/>";

    const double half_band = scale.kind() == ScaleType::Band ? scale.bandwidth() / 2.0 : 0.0;
    for (const Scalar& tick : scale.ticks(axis.tick_count)) {
        const Scalar pos_value = scale.apply(tick);
        const auto pos_number = coerce_number(pos_value);
        if (!pos_number) continue;
        const double pos = *pos_number + half_band;
        const std::string p = fmt3(pos);
        const std::string tick_out = fmt3(out_sign * 6.0);
        const std::string label_out = fmt3(out_sign * 9.0);
        if (vertical) {
            out += "<line x1=\"" + tick_out + "\" y1=\"" + p + "\" x2=\"0\" y2=\"" + p +
                   "\" stroke=\"#000\"/>";
            out += "<text x=\"" + label_out + "\" y=\"" + p + "\" dy=\"" + dy +
                   "\" text-anchor=\"" + anchor + "\"" + font + ">" +
                   xml_escape(format_scalar(tick, axis.format)) + "</text>";
        } else {
            out += "<line x1=\"" + p + "\" y1=\"" + tick_out + "\" x2=\"" + p +
                   "\" y2=\"0\" stroke=\"#000\"/>";
            out += "<text x=\"" + p + "\" y=\"" + label_out + "\" dy=\"" + dy +
                   "\" text-anchor=\"middle\"" + font + ">" +
                   xml_escape(format_scalar(tick, axis.format)) + "</text>";
        }
    }

    if (!axis.title.empty()) {
        const double mid = pixel_length / 2.0;
        if (vertical) {
            const double rotate = axis.orient == Orient::Left ? -90.0 : 90.0;
            out += "<text transform=\"translate(" + fmt3(out_sign * 30.0) + "," + fmt3(mid) +
                   ") rotate(" + fmt3(rotate) + ")\" text-anchor=\"middle\"" + font + ">" +
                   xml_escape(axis.title) + "</text>";
        } else {
            out += "<text x=\"" + fmt3(mid) + "\" y=\"" + fmt3(out_sign * 30.0) +
                   "\" text-anchor=\"middle\"" + font + ">" + xml_escape(axis.title) + "</text>";
        }
    }
    out += "</g>";
    return out;
}

/// Word cloud under a caller-supplied config and attribute table: the
/// extension surface. Words flow left to right in dataset order; a word
/// wraps when it would overrun the width, and each line is as tall as 1.2
/// times its largest font size.
inline Result<SvgDocument, ValidationReport> render_wordcloud(
    const EncodingConfig& config, const std::vector<std::pair<std::string, std::string>>& attributes,
    const EncodingSpec& spec, const Dataset& data, double width, double height) {
    auto built = create_encoder(config, spec);
    if (!built) return built.error();
    Encoder& enc = built.value();
    enc.set_domain_from_dataset(data);

    struct Word {
        double x = 0.0;
        std::size_t line = 0;
        double font_size = 0.0;
        std::vector<std::pair<std::string, std::string>> attrs;
        std::string content;
        std::string tooltip;
    };
    std::vector<Word> words;
    std::vector<double> line_max_size;
    double cursor = 0.0;
    for (const Row& row : data.rows) {
        Word w;
        w.font_size = 0.0;
        for (const auto& [channel, attribute] : attributes) {
            const ChannelEncoder& ce = enc.first(channel);
            const Scalar encoded = ce.encode_datum(row);
            if (channel == "fontSize" && encoded.is_number()) w.font_size = encoded.number();
            w.attrs.emplace_back(attribute, detail::attribute_value_text(encoded));
        }
        w.content = format_scalar(enc.first("text").encode_datum(row));
        w.tooltip = detail::tooltip_text(enc, row);

        const double estimated =
            0.6 * w.font_size * static_cast<double>(detail::codepoint_count(w.content));
        if (cursor > 0.0 && cursor + estimated > width) cursor = 0.0;
        if (cursor == 0.0) line_max_size.push_back(0.0);
        w.x = cursor;
        w.line = line_max_size.size() - 1;
        line_max_size.back() = std::max(line_max_size.back(), w.font_size);
        cursor += estimated + 4.0;
        words.push_back(std::move(w));
    }

    std::vector<double> baselines(line_max_size.size());
    double y = 0.0;
    for (std::size_t i = 0; i < line_max_size.size(); ++i) {
        y += 1.2 * line_max_size[i];
        baselines[i] = y;
    }

    SvgDocument doc;
    doc.text = svg_open_tag(width, height);
    for (const Word& w : words) {
        doc.text += "<text x=\"" + fmt3(w.x) + "\" y=\"" + fmt3(baselines[w.line]) +
                    "\" font-family=\"sans-serif\"";
        for (const auto& [attribute, value] : w.attrs)
            doc.text += " " + attribute + "=\"" + xml_escape(value) + "\"";
        doc.text += ">";
        if (!w.tooltip.empty()) doc.text += "<title>" + xml_escape(w.tooltip) + "</title>";
        doc.text += xml_escape(w.content) + "</text>";
    }
    doc.text += "</svg>";
    return doc;
}

inline Result<SvgDocument, ValidationReport> render_wordcloud(const EncodingSpec& spec,
                                                              const Dataset& data, double width,
                                                              double height) {
    return render_wordcloud(builtin_wordcloud_config(), builtin_wordcloud_attributes(), spec, data,
                            width, height);
}

/// Bar chart: x band over [0, width], y over [height, 0] (screen-flipped),
/// bars as <rect>, plus the y axis. Rows whose x or y does not encode are
/// skipped.
inline Result<SvgDocument, ValidationReport> render_barchart(const EncodingSpec& spec,
                                                             const Dataset& data, double width,
                                                             double height) {
    auto built = create_encoder(builtin_barchart_config(), spec);
    if (!built) return built.error();
    Encoder& enc = built.value();
    enc.set_domain_from_dataset(data);
    enc.set_range("x", {Scalar(0.0), Scalar(width)});
    enc.set_range("y", {Scalar(height), Scalar(0.0)});

    const ChannelEncoder& xe = enc.first("x");
    const ChannelEncoder& ye = enc.first("y");
    const ConcreteScale* xs = xe.scale();
    const ConcreteScale* ys = ye.scale();
    const double bar_width = xs && xs->kind() == ScaleType::Band ? xs->bandwidth() : 1.0;

    /// Screen position of the domain minimum: the bar baseline.
    double baseline = height;
    if (ys && ys->domain().size() == 2) {
        const auto a = coerce_number(ys->domain()[0]);
        const auto b = coerce_number(ys->domain()[1]);
        if (a && b) {
            const Scalar& dmin = *a <= *b ? ys->domain()[0] : ys->domain()[1];
            if (const auto p = coerce_number(ys->apply(dmin))) baseline = *p;
        }
    }

    SvgDocument doc;
    doc.text = svg_open_tag(width, height);
    const Scalar null_marker;
    for (const Row& row : data.rows) {
        const Scalar sx = xe.encode_datum(row, null_marker);
        const Scalar sy = ye.encode_datum(row, null_marker);
        const auto px = coerce_number(sx);
        const auto py = coerce_number(sy);
        if (!px || !py) continue;
        const double bar_height = std::max(0.0, baseline - *py);
        const std::string fill = format_scalar(enc.first("fill").encode_datum(row));
        const std::string tooltip = detail::tooltip_text(enc, row);
        doc.text += "<rect x=\"" + fmt3(*px) + "\" y=\"" + fmt3(*py) + "\" width=\"" +
                    fmt3(bar_width) + "\" height=\"" + fmt3(bar_height) + "\" fill=\"" +
                    xml_escape(fill) + "\"";
        if (tooltip.empty()) {
            doc.text += "/>";
        } else {
            doc.text += "><title>" + xml_escape(tooltip) + "</title></rect>";
        }
    }

    if (ys) {
        if (const auto* f = std::get_if<CompletedFieldDef>(&ye.def()); f && f->axis)
            doc.text += render_axis(*ys, *f->axis, height);
    }
    doc.text += "</svg>";
    return doc;
}

}  // namespace encgram

#endif  // ENCGRAM_RENDER_HPP
