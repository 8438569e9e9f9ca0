// encgram: command-line front end for the encoding grammar library.
//
// Exit codes: 0 success, 1 validation failed, 2 parse or IO error,
// 3 usage error (including an unknown --channel name). Standard output
// carries only the artifact; diagnostics go to standard error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "encgram/encgram.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParseIo = 2;
constexpr int kExitUsage = 3;

struct CommandError {
    int code;
    std::string message;
};

encgram::Result<std::string, CommandError> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        if (std::cin.bad())
            return CommandError{kExitParseIo, "cannot read standard input"};
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return CommandError{kExitParseIo, "cannot open \"" + path + "\""};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return CommandError{kExitParseIo, "cannot read \"" + path + "\""};
    return buffer.str();
}

encgram::Result<bool, CommandError> write_output(const std::string& path,
                                                 const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return CommandError{kExitParseIo, "cannot open \"" + path + "\" for writing"};
    out << text;
    out.flush();
    if (!out) return CommandError{kExitParseIo, "cannot write \"" + path + "\""};
    return true;
}

encgram::Result<encgram::EncodingConfig, CommandError> load_config(const std::string& arg) {
    if (arg == "builtin:wordcloud") return encgram::builtin_wordcloud_config();
    if (arg == "builtin:barchart") return encgram::builtin_barchart_config();
    auto text = read_input(arg);
    if (!text) return text.error();
    auto config = encgram::parse_config(text.value());
    if (!config)
        return CommandError{kExitParseIo, "config: " + config.error().to_string()};
    return std::move(config.value());
}

encgram::Result<encgram::EncodingSpec, CommandError> load_spec(const std::string& path) {
    auto text = read_input(path);
    if (!text) return text.error();
    auto spec = encgram::parse_spec(text.value());
    if (!spec) return CommandError{kExitParseIo, "spec: " + spec.error().to_string()};
    return std::move(spec.value());
}

encgram::Result<encgram::Dataset, CommandError> load_data(const std::string& path) {
    auto text = read_input(path);
    if (!text) return text.error();
    const bool csv = path.size() >= 4 && [&] {
        std::string tail = path.substr(path.size() - 4);
        for (char& c : tail) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return tail == ".csv";
    }();
    auto data = encgram::load_rows(text.value(),
                                   csv ? encgram::TableFormat::Csv : encgram::TableFormat::Json);
    if (!data) return CommandError{kExitParseIo, "data: " + data.error().to_string()};
    return std::move(data.value());
}

std::string report_as_text(const encgram::ValidationReport& report) {
    if (report.ok()) return "ok\n";
    std::string out;
    for (const auto& issue : report.issues)
        out += issue.path + ": " + std::string(encgram::issue_code_name(issue.code)) + ": " +
               issue.message + "\n";
    return out;
}

std::string report_as_json(const encgram::ValidationReport& report) {
    encgram::ordered_json array = encgram::ordered_json::array();
    for (const auto& issue : report.issues) {
        encgram::ordered_json item;
        item["path"] = issue.path;
        item["code"] = encgram::issue_code_name(issue.code);
        item["message"] = issue.message;
        array.push_back(std::move(item));
    }
    return array.dump() + "\n";
}

int fail(const CommandError& err) {
    std::cerr << "encgram: " << err.message << "\n";
    return err.code;
}

int cmd_validate(const std::string& config_arg, const std::string& spec_path,
                 const std::string& format) {
    auto config = load_config(config_arg);
    if (!config) return fail(config.error());
    auto spec = load_spec(spec_path);
    if (!spec) return fail(spec.error());
    const auto report = encgram::validate(config.value(), spec.value());
    std::cout << (format == "json" ? report_as_json(report) : report_as_text(report));
    return report.ok() ? kExitOk : kExitValidation;
}

int cmd_fill(const std::string& config_arg, const std::string& spec_path) {
    auto config = load_config(config_arg);
    if (!config) return fail(config.error());
    auto spec = load_spec(spec_path);
    if (!spec) return fail(spec.error());
    const auto report = encgram::validate(config.value(), spec.value());
    if (!report.ok()) {
        std::cerr << report_as_text(report);
        return kExitValidation;
    }
    const auto completed = encgram::fill_spec(config.value(), spec.value());
    std::cout << encgram::serialize_spec(completed) << "\n";
    return kExitOk;
}

int cmd_encode(const std::string& config_arg, const std::string& spec_path,
               const std::string& data_path, const std::string& channel,
               const std::optional<std::string>& fallback_text) {
    auto config = load_config(config_arg);
    if (!config) return fail(config.error());
    auto spec = load_spec(spec_path);
    if (!spec) return fail(spec.error());
    auto built = encgram::create_encoder(config.value(), spec.value());
    if (!built) {
        std::cerr << report_as_text(built.error());
        return kExitValidation;
    }
    auto data = load_data(data_path);
    if (!data) return fail(data.error());

    encgram::Encoder& encoder = built.value();
    encoder.set_domain_from_dataset(data.value());
    const auto* encoders = encoder.find(channel);
    if (!encoders)
        return fail(CommandError{kExitUsage, "unknown channel \"" + channel + "\""});

    std::optional<encgram::Scalar> fallback;
    if (fallback_text) {
        auto doc = encgram::parse_json_strict(*fallback_text);
        if (doc) {
            auto scalar = encgram::json_to_scalar(doc.value());
            if (scalar) fallback = std::move(scalar.value());
        }
        if (!fallback) fallback = encgram::Scalar(*fallback_text);
    }

    encgram::ordered_json out = encgram::ordered_json::array();
    for (const auto& row : data.value().rows) {
        auto encode_one = [&](const encgram::ChannelEncoder& ce) {
            return fallback ? ce.encode_datum(row, *fallback) : ce.encode_datum(row);
        };
        if (encoders->size() == 1 && !encoders->front().config().multiple) {
            out.push_back(encgram::scalar_to_json(encode_one(encoders->front())));
        } else {
            encgram::ordered_json values = encgram::ordered_json::array();
            for (const auto& ce : *encoders) values.push_back(encgram::scalar_to_json(encode_one(ce)));
            out.push_back(std::move(values));
        }
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_render(bool wordcloud, const std::string& spec_path, const std::string& data_path,
               double width, double height, const std::string& out_path) {
    auto spec = load_spec(spec_path);
    if (!spec) return fail(spec.error());
    auto data = load_data(data_path);
    if (!data) return fail(data.error());
    auto svg = wordcloud ? encgram::render_wordcloud(spec.value(), data.value(), width, height)
                         : encgram::render_barchart(spec.value(), data.value(), width, height);
    if (!svg) {
        std::cerr << report_as_text(svg.error());
        return kExitValidation;
    }
    auto written = write_output(out_path, svg.value().text + "\n");
    if (!written) return fail(written.error());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"encoding grammar toolkit: validate, complete, encode, render"};
    app.require_subcommand(1);

    std::string config_arg;
    std::string spec_path;
    std::string data_path;
    std::string format = "text";
    std::string channel;
    std::string out_path;
    std::optional<std::string> fallback_text;
    double width = 0.0;
    double height = 0.0;

    auto* validate = app.add_subcommand("validate", "check a spec against a config");
    validate->add_option("--config", config_arg, "config path, -, builtin:wordcloud or builtin:barchart")
        ->required();
    validate->add_option("--spec", spec_path, "spec path or -")->required();
    validate->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* fill = app.add_subcommand("fill", "complete a spec with inferred defaults");
    fill->add_option("--config", config_arg, "config path, -, builtin:wordcloud or builtin:barchart")
        ->required();
    fill->add_option("--spec", spec_path, "spec path or -")->required();

    auto* encode = app.add_subcommand("encode", "encode a dataset through one channel");
    encode->add_option("--config", config_arg, "config path, -, builtin:wordcloud or builtin:barchart")
        ->required();
    encode->add_option("--spec", spec_path, "spec path or -")->required();
    encode->add_option("--data", data_path, "dataset path (.csv for CSV, JSON otherwise) or -")
        ->required();
    encode->add_option("--channel", channel, "channel name")->required();
    encode->add_option("--fallback", fallback_text,
                       "value for rows that do not encode (JSON scalar, else text)");

    auto* render = app.add_subcommand("render", "render a demo SVG");
    render->require_subcommand(1);
    CLI::App* render_subs[2];
    render_subs[0] = render->add_subcommand("wordcloud", "flow-layout word cloud");
    render_subs[1] = render->add_subcommand("barchart", "single-axis bar chart");
    for (CLI::App* sub : render_subs) {
        sub->add_option("--spec", spec_path, "spec path or -")->required();
        sub->add_option("--data", data_path, "dataset path (.csv for CSV, JSON otherwise) or -")
            ->required();
        sub->add_option("--width", width, "canvas width in px")->required();
        sub->add_option("--height", height, "canvas height in px")->required();
        sub->add_option("-o,--output", out_path, "output path (default standard output)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(config_arg, spec_path, format);
        if (fill->parsed()) return cmd_fill(config_arg, spec_path);
        if (encode->parsed())
            return cmd_encode(config_arg, spec_path, data_path, channel, fallback_text);
        if (render->parsed())
            return cmd_render(render_subs[0]->parsed(), spec_path, data_path, width, height,
                              out_path);
    } catch (const encgram::UnresolvedEncoderError& e) {
        std::cerr << "encgram: " << e.what() << "\n";
        return kExitValidation;
    } catch (const encgram::DomainError& e) {
        std::cerr << "encgram: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "encgram: " << e.what() << "\n";
        return kExitParseIo;
    }
    return kExitUsage;
}
