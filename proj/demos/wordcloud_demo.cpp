// Renders the demo word cloud and bar chart for a small animal census and
// writes wordcloud.svg and barchart.svg into the working directory.

#include <fstream>
#include <iostream>
#include <string>

#include "encgram/encgram.hpp"

namespace {

bool write_svg(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text << "\n";
    return static_cast<bool>(out);
}

}  // namespace

int main() {
    const auto data = encgram::load_rows(
        R"([{"kind": "Cat", "count": 9},
            {"kind": "Dog", "count": 11},
            {"kind": "Emu", "count": 4},
            {"kind": "Fox", "count": 7}])",
        encgram::TableFormat::Json);
    if (!data.ok()) {
        std::cerr << "data: " << data.error().to_string() << "\n";
        return 1;
    }

    const auto cloud_spec = encgram::parse_spec(R"({
        "color": {"field": "kind", "type": "nominal"},
        "fontSize": {"field": "count", "type": "quantitative", "scale": {"range": [10, 48]}},
        "text": {"field": "kind"},
        "tooltip": [{"field": "kind"}, {"field": "count", "title": "seen"}]
    })");
    const auto cloud = encgram::render_wordcloud(cloud_spec.value(), data.value(), 400, 200);
    if (!cloud.ok()) {
        for (const auto& issue : cloud.error().issues)
            std::cerr << issue.path << ": " << issue.message << "\n";
        return 1;
    }

    const auto bar_spec = encgram::parse_spec(R"({
        "x": {"field": "kind", "type": "ordinal"},
        "y": {"field": "count", "type": "quantitative", "scale": {"zero": true},
              "title": "animals"}
    })");
    const auto bars = encgram::render_barchart(bar_spec.value(), data.value(), 400, 200);
    if (!bars.ok()) {
        for (const auto& issue : bars.error().issues)
            std::cerr << issue.path << ": " << issue.message << "\n";
        return 1;
    }

    if (!write_svg("wordcloud.svg", cloud.value().text) ||
        !write_svg("barchart.svg", bars.value().text)) {
        std::cerr << "cannot write output files\n";
        return 1;
    }
    std::cout << "wrote wordcloud.svg and barchart.svg\n";
    return 0;
}
