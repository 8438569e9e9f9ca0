// Shows the extension surface: teaching the word cloud a fontWeight channel
// takes one config row and one attribute-table row. Writes
// wordcloud_weighted.svg into the working directory.

#include <fstream>
#include <iostream>

#include "encgram/encgram.hpp"

int main() {
    auto config = encgram::builtin_wordcloud_config();
    config.add("fontWeight",
               {encgram::ChannelType::Numeric, encgram::OutputKind::Number, false,
                encgram::ChannelDef(encgram::ValueDef{encgram::Scalar(400.0)})});

    auto attributes = encgram::builtin_wordcloud_attributes();
    attributes.emplace_back("fontWeight", "font-weight");

    const auto spec = encgram::parse_spec(R"({
        "text": {"field": "kind"},
        "fontSize": {"value": 24},
        "fontWeight": {"field": "count", "type": "quantitative",
                       "scale": {"range": [300, 800]}}
    })");
    const auto data = encgram::load_rows(
        R"([{"kind": "Cat", "count": 9}, {"kind": "Dog", "count": 11},
            {"kind": "Emu", "count": 4}])",
        encgram::TableFormat::Json);

    const auto svg = encgram::render_wordcloud(config, attributes, spec.value(), data.value(),
                                               400, 120);
    if (!svg.ok()) {
        for (const auto& issue : svg.error().issues)
            std::cerr << issue.path << ": " << issue.message << "\n";
        return 1;
    }
    std::ofstream out("wordcloud_weighted.svg", std::ios::binary);
    out << svg.value().text << "\n";
    if (!out) {
        std::cerr << "cannot write wordcloud_weighted.svg\n";
        return 1;
    }
    std::cout << "wrote wordcloud_weighted.svg\n";
    return 0;
}
