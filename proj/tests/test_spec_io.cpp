#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <variant>

#include "encgram/fill.hpp"
#include "encgram/spec_io.hpp"
#include "encgram/validator.hpp"
#include "gen.hpp"

using namespace encgram;

namespace {

ChannelDef parse_def_ok(const std::string& text) {
    const auto doc = parse_json_strict(text);
    REQUIRE(doc.ok());
    auto def = parse_channel_def(doc.value(), "enc");
    REQUIRE(def.ok());
    return def.value();
}

ParseError parse_def_err(const std::string& text) {
    const auto doc = parse_json_strict(text);
    REQUIRE(doc.ok());
    auto def = parse_channel_def(doc.value(), "enc");
    REQUIRE(!def.ok());
    return def.error();
}

EncodingConfig demo_config() {
    auto c = parse_config(R"({"channels": {
        "x": {"type": "X"},
        "y": {"type": "Y"},
        "color": {"type": "Color", "default": {"value": "#000000"}},
        "size": {"type": "Numeric", "default": {"value": 14}},
        "label": {"type": "Text"},
        "extra": {"type": "Category", "multiple": true, "default": {"value": "none"}}
    }})");
    REQUIRE(c.ok());
    return c.value();
}

}  // namespace

TEST_CASE("def tags are decided by shape") {
    CHECK(def_kind(parse_def_ok(R"({"value": 3})")) == DefKind::Value);
    CHECK(def_kind(parse_def_ok(R"({"field": "a"})")) == DefKind::Field);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "type": "nominal"})")) == DefKind::ScaleField);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "scale": {"type": "linear"}})")) ==
          DefKind::ScaleField);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "axis": {"orient": "bottom"}})")) ==
          DefKind::PositionField);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "axis": false})")) == DefKind::PositionField);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "type": "ordinal", "axis": false})")) ==
          DefKind::PositionField);
    CHECK(def_kind(parse_def_ok(R"({"field": "a", "title": "T", "format": ".2f"})")) ==
          DefKind::Field);
}

TEST_CASE("value defs admit no siblings") {
    const auto err = parse_def_err(R"({"value": 3, "field": "a"})");
    CHECK(err.path == "enc");
    CHECK(err.message.find("value") != std::string::npos);

    CHECK(parse_def_err(R"({"value": null})").path == "enc.value");
    CHECK(parse_def_err(R"({})").path == "enc");
}

TEST_CASE("def parsing rejects malformed shapes with precise paths") {
    CHECK(parse_def_err(R"({"field": ""})").path == "enc.field");
    CHECK(parse_def_err(R"({"field": 3})").path == "enc.field");
    CHECK(parse_def_err(R"({"field": "a", "bogus": 1})").path == "enc.bogus");
    CHECK(parse_def_err(R"({"field": "a", "type": "weird"})").path == "enc.type");
    CHECK(parse_def_err(R"({"field": "a", "axis": true})").path == "enc.axis");
    CHECK(parse_def_err(R"({"field": "a", "axis": {"orient": "bottom", "junk": 1}})").path ==
          "enc.axis.junk");
    CHECK(parse_def_err(R"({"field": "a", "axis": {}})").path == "enc.axis");
    CHECK(parse_def_err(R"({"field": "a", "axis": {"orient": "diagonal"}})").path ==
          "enc.axis.orient");
    CHECK(parse_def_err(R"({"field": "a", "axis": {"orient": "top", "tickCount": 0}})").path ==
          "enc.axis.tickCount");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"weird": 1}})").path == "enc.scale.weird");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"base": 1}})").path == "enc.scale.base");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"base": -2}})").path == "enc.scale.base");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"padding": 1.5}})").path ==
          "enc.scale.padding");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"domain": "sometime"}})").path ==
          "enc.scale.domain");
    CHECK(parse_def_err(R"({"field": "a", "scale": {"range": [1, {}]}})").path ==
          "enc.scale.range[1]");
}

TEST_CASE("scale defs carry markers and literal lists") {
    const auto def = parse_def_ok(
        R"({"field": "a", "scale": {"domain": "from-data", "range": "from-context",
            "nice": true, "clamp": false, "zero": true, "base": 2, "padding": 0.25}})");
    const auto* sf = as_scale_field_def(def);
    REQUIRE(sf != nullptr);
    REQUIRE(sf->scale.has_value());
    CHECK(std::holds_alternative<FromData>(sf->scale->domain.value()));
    CHECK(std::holds_alternative<FromContext>(sf->scale->range.value()));
    CHECK(sf->scale->nice == true);
    CHECK(sf->scale->zero == true);
    CHECK(sf->scale->base == 2.0);
    CHECK(sf->scale->padding == 0.25);

    const auto lists = parse_def_ok(R"({"field": "a", "scale": {"domain": [0, 10],
                                      "range": ["pink", "blue"]}})");
    const auto* lf = as_scale_field_def(lists);
    REQUIRE(lf != nullptr);
    const auto& dom = std::get<std::vector<Scalar>>(lf->scale->domain.value());
    CHECK(dom == std::vector<Scalar>{Scalar(0.0), Scalar(10.0)});
}

TEST_CASE("spec parsing tracks lists and indexes error paths") {
    const auto spec = parse_spec(R"({
        "color": {"field": "kind", "type": "nominal",
                  "scale": {"type": "ordinal", "range": ["pink", "blue"]}},
        "fontSize": {"field": "count", "type": "quantitative", "scale": {"range": [0, 36]}},
        "text": {"field": "kind"},
        "tooltip": [{"field": "kind"}, {"field": "count"}]
    })");
    REQUIRE(spec.ok());
    CHECK(spec.value().size() == 4);
    const auto* tip = spec.value().find("tooltip");
    REQUIRE(tip != nullptr);
    CHECK(tip->was_list);
    CHECK(tip->defs.size() == 2);
    const auto* text = spec.value().find("text");
    REQUIRE(text != nullptr);
    CHECK(!text->was_list);

    auto bad = parse_spec(R"({"tooltip": [{"field": "a"}, {"field": ""}]})");
    REQUIRE(!bad.ok());
    CHECK(bad.error().path == "tooltip[1].field");

    bad = parse_spec(R"({"tooltip": []})");
    REQUIRE(!bad.ok());
    CHECK(bad.error().path == "tooltip");

    bad = parse_spec(R"([1, 2])");
    CHECK(!bad.ok());

    bad = parse_spec(R"({"x": {"value": 1}, "x": {"value": 2}})");
    REQUIRE(!bad.ok());
    CHECK(bad.error().message.find("duplicate") != std::string::npos);

    // Spec keys are free-form; the validator decides config membership.
    CHECK(parse_spec(R"({"bad name!": {"value": 1}})").ok());

    bad = parse_spec("{");
    REQUIRE(!bad.ok());
    CHECK(bad.error().message.find("byte") != std::string::npos);
}

TEST_CASE("config parsing enforces shape and output invariants") {
    const auto config = demo_config();
    REQUIRE(config.find("size") != nullptr);
    CHECK(config.find("size")->channel_type == ChannelType::Numeric);
    CHECK(config.find("size")->output == OutputKind::Number);
    CHECK(config.find("color")->output == OutputKind::Text);
    CHECK(config.find("extra")->multiple);
    CHECK(!config.find("label")->multiple);
    REQUIRE(config.find("size")->default_def.has_value());

    CHECK(!parse_config(R"({})").ok());
    CHECK(!parse_config(R"({"channels": {}, "extra": 1})").ok());
    CHECK(!parse_config(R"({"channels": {"x": {}}})").ok());
    CHECK(!parse_config(R"({"channels": {"x": {"type": "sideways"}}})").ok());
    CHECK(!parse_config(R"({"channels": {"x": {"type": "X", "junk": 1}}})").ok());
    CHECK(!parse_config(R"({"channels": {"9x": {"type": "X"}}})").ok());

    CHECK(parse_config(R"({"channels": {"c": {"type": "Color", "output": "text"}}})").ok());
    CHECK(!parse_config(R"({"channels": {"c": {"type": "Color", "output": "number"}}})").ok());
    CHECK(!parse_config(R"({"channels": {"x": {"type": "X", "output": "text"}}})").ok());
    CHECK(!parse_config(R"({"channels": {"n": {"type": "Numeric", "output": "boolean"}}})").ok());
    CHECK(parse_config(R"({"channels": {"k": {"type": "Category", "output": "boolean"}}})").ok());

    // Defaults are vetted as deeply as user specs.
    CHECK(!parse_config(
               R"({"channels": {"t": {"type": "Text", "default": {"field": "a", "type": "nominal"}}}})")
               .ok());
    CHECK(!parse_config(
               R"({"channels": {"c": {"type": "Color", "default":
                   {"field": "a", "type": "quantitative", "scale": {"type": "ordinal"}}}}})")
               .ok());
    CHECK(parse_config(
              R"({"channels": {"c": {"type": "Color", "default":
                  {"field": "a", "type": "quantitative", "scale": {"type": "linear"}}}}})")
              .ok());
}

TEST_CASE("serialization is canonical: key order in the source does not matter") {
    const char* a = R"({
        "fontSize": {"type": "quantitative", "field": "count", "scale": {"range": [0, 36]}},
        "color": {"field": "kind", "type": "nominal"}
    })";
    const char* b = R"({
        "color": {"type": "nominal", "field": "kind"},
        "fontSize": {"scale": {"range": [0, 36]}, "field": "count", "type": "quantitative"}
    })";
    const auto sa = parse_spec(a);
    const auto sb = parse_spec(b);
    REQUIRE(sa.ok());
    REQUIRE(sb.ok());
    CHECK(sa.value().size() == sb.value().size());
    for (const auto& [name, entry] : sa.value().channels()) {
        const auto* other = sb.value().find(name);
        REQUIRE(other != nullptr);
        CHECK(*other == entry);
    }
    CHECK(serialize_spec(sa.value()) == serialize_spec(sb.value()));
}

TEST_CASE("parse and serialize round-trip generated specs") {
    testgen::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto config = testgen::random_config(rng);
        const auto spec = testgen::random_valid_spec(config, rng);
        const std::string text = serialize_spec(spec);
        const auto again = parse_spec(text);
        REQUIRE(again.ok());
        CHECK(again.value().size() == spec.size());
        for (const auto& [name, entry] : spec.channels()) {
            const auto* back = again.value().find(name);
            REQUIRE(back != nullptr);
            CHECK(*back == entry);
        }
        CHECK(serialize_spec(again.value()) == text);
    }
}

TEST_CASE("completed specs serialize with markers, axis flags and minimal text defs") {
    const auto config = demo_config();
    const auto spec = parse_spec(R"({
        "x": {"field": "kind", "type": "ordinal", "axis": false},
        "y": {"field": "count", "type": "quantitative"},
        "label": {"field": "kind", "title": "Kind"},
        "size": {"field": "count", "type": "quantitative", "scale": {"type": "log", "base": 2}}
    })");
    REQUIRE(spec.ok());
    REQUIRE(validate(config, spec.value()).ok());
    const auto filled = fill_spec(config, spec.value());
    const std::string text = serialize_spec(filled);

    const auto doc = parse_json_strict(text);
    REQUIRE(doc.ok());
    const auto& root = doc.value();
    CHECK(root.at("x").at("axis") == ordered_json(false));
    CHECK(root.at("x").at("scale").at("padding") == ordered_json(0.1));
    CHECK(!root.at("x").at("scale").contains("base"));
    CHECK(root.at("y").at("axis").at("orient") == ordered_json("left"));
    CHECK(root.at("y").at("scale").at("domain") == ordered_json("from-data"));
    CHECK(root.at("y").at("scale").at("range") == ordered_json("from-context"));
    CHECK(root.at("y").at("scale").at("nice") == ordered_json(true));
    CHECK(!root.at("y").at("scale").contains("padding"));
    CHECK(root.at("size").at("scale").at("base") == ordered_json(2));
    CHECK(!root.at("label").contains("type"));
    CHECK(!root.at("label").contains("scale"));
    CHECK(!root.at("label").contains("axis"));
    CHECK(root.at("label").at("title") == ordered_json("Kind"));
    CHECK(root.at("label").at("format") == ordered_json(""));

    // A completed document re-enters the pipeline unchanged.
    const auto again = parse_spec(text);
    REQUIRE(again.ok());
    REQUIRE(validate(config, again.value()).ok());
    const auto refilled = fill_spec(config, again.value());
    CHECK(refilled == filled);
    CHECK(serialize_spec(refilled) == text);
}

TEST_CASE("document-level completion is idempotent across generated specs") {
    testgen::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto config = testgen::random_config(rng);
        const auto spec = testgen::random_valid_spec(config, rng);
        REQUIRE(validate(config, spec).ok());

        const auto filled = fill_spec(config, spec);
        const std::string text = serialize_spec(filled);
        const auto reparsed = parse_spec(text);
        REQUIRE(reparsed.ok());
        const auto report = validate(config, reparsed.value());
        if (!report.ok()) {
            for (const auto& issue : report.issues)
                UNSCOPED_INFO(issue.path << ": " << issue_code_name(issue.code));
        }
        REQUIRE(report.ok());
        const auto refilled = fill_spec(config, reparsed.value());
        CHECK(refilled == filled);
        CHECK(serialize_spec(refilled) == text);
    }
}
