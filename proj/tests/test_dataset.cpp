#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "encgram/dataset.hpp"

using namespace encgram;

namespace {

Dataset load_ok(std::string_view doc, TableFormat format) {
    auto data = load_rows(doc, format);
    REQUIRE(data.ok());
    return std::move(data.value());
}

std::string load_err(std::string_view doc, TableFormat format) {
    auto data = load_rows(doc, format);
    REQUIRE(!data.ok());
    return data.error().to_string();
}

}  // namespace

TEST_CASE("JSON rows load with native scalar kinds") {
    const auto data = load_ok(R"([{"kind":"Cat","count":9},{"kind":"Dog","count":11}])",
                              TableFormat::Json);
    REQUIRE(data.rows.size() == 2);
    CHECK(get_field(data.rows[0], "kind") == Scalar("Cat"));
    CHECK(get_field(data.rows[0], "count") == Scalar(9.0));
    CHECK(get_field(data.rows[1], "kind") == Scalar("Dog"));
    CHECK(get_field(data.rows[0], "absent").is_null());

    const auto typed = load_ok(R"([{"n": 1.5, "b": true, "s": "x", "z": null}])",
                               TableFormat::Json);
    CHECK(get_field(typed.rows[0], "n") == Scalar(1.5));
    CHECK(get_field(typed.rows[0], "b") == Scalar(true));
    CHECK(get_field(typed.rows[0], "s") == Scalar("x"));
    CHECK(get_field(typed.rows[0], "z").is_null());

    CHECK(load_ok("[]", TableFormat::Json).rows.empty());
}

TEST_CASE("JSON rows reject nests and non-row shapes with precise paths") {
    CHECK(load_err(R"([{"a": 1}, {"geo": {"lat": 0}}])", TableFormat::Json).find("[1].geo") !=
          std::string::npos);
    CHECK(load_err(R"([{"a": [1, 2]}])", TableFormat::Json).find("[0].a") != std::string::npos);
    CHECK(load_err(R"({"a": 1})", TableFormat::Json).find("array") != std::string::npos);
    CHECK(load_err(R"([1, 2])", TableFormat::Json).find("[0]") != std::string::npos);
    CHECK(load_err(R"([{"a": 1uh}])", TableFormat::Json).find("byte") != std::string::npos);
}

TEST_CASE("CSV cells coerce per cell, without trimming") {
    const auto data = load_ok(
        "n,neg,sci,flag,off,empty,date,datetime,word,spaced,hexish,inf,nan\n"
        "5,-2.5,1e3,true,false,,2024-01-02,2024-01-02T03:04:05,abc, 5,0x10,inf,nan\n",
        TableFormat::Csv);
    REQUIRE(data.rows.size() == 1);
    const Row& row = data.rows[0];
    CHECK(get_field(row, "n") == Scalar(5.0));
    CHECK(get_field(row, "neg") == Scalar(-2.5));
    CHECK(get_field(row, "sci") == Scalar(1000.0));
    CHECK(get_field(row, "flag") == Scalar(true));
    CHECK(get_field(row, "off") == Scalar(false));
    CHECK(get_field(row, "empty").is_null());
    CHECK(get_field(row, "date").kind() == Scalar::Kind::Timestamp);
    CHECK(get_field(row, "date") == Scalar::timestamp(19724LL * 86400000));
    CHECK(get_field(row, "datetime").kind() == Scalar::Kind::Timestamp);
    CHECK(get_field(row, "word") == Scalar("abc"));
    CHECK(get_field(row, "spaced") == Scalar(" 5"));
    CHECK(get_field(row, "hexish") == Scalar("0x10"));
    CHECK(get_field(row, "inf") == Scalar("inf"));
    CHECK(get_field(row, "nan") == Scalar("nan"));
}

TEST_CASE("CSV quoting: commas, doubled quotes and newlines inside cells") {
    const auto data = load_ok("a,b\n\"x,y\",2\n\"say \"\"hi\"\"\",3\n\"line\nbreak\",4\n"
                              "\"crlf\r\nbreak\",5\n\"7\",quotednum\n",
                              TableFormat::Csv);
    REQUIRE(data.rows.size() == 5);
    CHECK(get_field(data.rows[0], "a") == Scalar("x,y"));
    CHECK(get_field(data.rows[1], "a") == Scalar("say \"hi\""));
    CHECK(get_field(data.rows[2], "a") == Scalar("line\nbreak"));
    CHECK(get_field(data.rows[3], "a") == Scalar("crlf\r\nbreak"));
    // Quoting is a transport detail; the cell text still coerces.
    CHECK(get_field(data.rows[4], "a") == Scalar(7.0));
}

TEST_CASE("CSV line endings and blank lines") {
    const auto crlf = load_ok("a,b\r\n1,2\r\n\r\n3,4\r\n", TableFormat::Csv);
    REQUIRE(crlf.rows.size() == 2);
    CHECK(get_field(crlf.rows[1], "a") == Scalar(3.0));

    const auto bare_cr = load_ok("a,b\r1,2\r", TableFormat::Csv);
    REQUIRE(bare_cr.rows.size() == 1);
    CHECK(get_field(bare_cr.rows[0], "b") == Scalar(2.0));

    const auto no_trailing = load_ok("a,b\n1,2", TableFormat::Csv);
    REQUIRE(no_trailing.rows.size() == 1);

    const auto blanks = load_ok("a,b\n\n1,2\n\n", TableFormat::Csv);
    REQUIRE(blanks.rows.size() == 1);
}

TEST_CASE("short CSV rows leave fields null; long rows are an error") {
    const auto data = load_ok("a,b,c\n1,2\n", TableFormat::Csv);
    REQUIRE(data.rows.size() == 1);
    CHECK(get_field(data.rows[0], "b") == Scalar(2.0));
    CHECK(get_field(data.rows[0], "c").is_null());

    const auto err = load_err("a,b\n1,2,3\n", TableFormat::Csv);
    CHECK(err.find("row 2") != std::string::npos);
    CHECK(err.find("3 cells") != std::string::npos);
}

TEST_CASE("CSV structural errors") {
    CHECK(load_err("", TableFormat::Csv).find("header") != std::string::npos);
    CHECK(load_err("a,\n1,2\n", TableFormat::Csv).find("column 2") != std::string::npos);
    CHECK(load_err("a,a\n1,2\n", TableFormat::Csv).find("duplicate") != std::string::npos);
    CHECK(load_err("a,b\n\"open,2\n", TableFormat::Csv).find("unterminated") !=
          std::string::npos);
    CHECK(load_err("a,b\n\"x\"y,2\n", TableFormat::Csv).find("stray") != std::string::npos);
    CHECK(load_err("a,b\nx\"y,2\n", TableFormat::Csv).find("stray") != std::string::npos);
}

TEST_CASE("serialize_rows round-trips JSON-born data") {
    const char* doc = R"([{"kind":"Cat","count":9,"ok":true,"note":null},)"
                      R"({"kind":"Dog","count":11.5,"ok":false,"note":"x"}])";
    const auto data = load_ok(doc, TableFormat::Json);
    const std::string text = serialize_rows(data);
    const auto again = load_ok(text, TableFormat::Json);
    CHECK(again.rows == data.rows);
    // Integral numbers emit without a decimal point.
    CHECK(text.find("\"count\":9,") != std::string::npos);
    CHECK(text.find("11.5") != std::string::npos);
}

TEST_CASE("extent picks min and max over coercible values only") {
    const auto data = load_ok(
        R"([{"v": 5}, {"v": "skip"}, {"v": null}, {"v": -3}, {"w": 1}, {"v": 12}])",
        TableFormat::Json);
    const auto numbers = extent(data, "v", ValueClass::Number);
    REQUIRE(numbers.has_value());
    CHECK(numbers->first == Scalar(-3.0));
    CHECK(numbers->second == Scalar(12.0));

    CHECK(!extent(data, "missing", ValueClass::Number).has_value());
    CHECK(!extent(load_ok("[]", TableFormat::Json), "v", ValueClass::Number).has_value());

    const auto dates = load_ok(
        R"([{"d": "2024-03-01"}, {"d": "2023-12-25"}, {"d": "junk"}, {"d": "2024-01-15"}])",
        TableFormat::Json);
    const auto span = extent(dates, "d", ValueClass::Timestamp);
    REQUIRE(span.has_value());
    CHECK(span->first.kind() == Scalar::Kind::Timestamp);
    CHECK(span->first == Scalar::timestamp(*parse_iso8601("2023-12-25")));
    CHECK(span->second == Scalar::timestamp(*parse_iso8601("2024-03-01")));

    // Single qualifying value: extent degenerates to [v, v].
    const auto one = load_ok(R"([{"v": 7}])", TableFormat::Json);
    const auto single = extent(one, "v", ValueClass::Number);
    REQUIRE(single.has_value());
    CHECK(single->first == single->second);
}

TEST_CASE("extent against a brute-force oracle, permutation invariant") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        Dataset data;
        std::vector<double> qualifying;
        const int n = static_cast<int>(unit(rng) * 30);
        for (int i = 0; i < n; ++i) {
            Row row;
            const double roll = unit(rng);
            if (roll < 0.5) {
                const double v = -100.0 + unit(rng) * 200.0;
                row.emplace_back("v", Scalar(v));
                qualifying.push_back(v);
            } else if (roll < 0.65) {
                row.emplace_back("v", Scalar("text"));
            } else if (roll < 0.8) {
                row.emplace_back("v", Scalar{});
            } else {
                row.emplace_back("other", Scalar(1.0));
            }
            data.rows.push_back(std::move(row));
        }

        const auto got = extent(data, "v", ValueClass::Number);
        if (qualifying.empty()) {
            CHECK(!got.has_value());
            continue;
        }
        auto sorted = qualifying;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(got.has_value());
        CHECK(got->first == Scalar(sorted.front()));
        CHECK(got->second == Scalar(sorted.back()));

        auto shuffled = data;
        std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
        CHECK(extent(shuffled, "v", ValueClass::Number) == got);
    }
}

TEST_CASE("unique_values: first appearance order, nulls skipped, kinds distinct") {
    const auto data = load_ok(
        R"([{"k":"Dog"},{"k":"Cat"},{"k":null},{"k":"Dog"},{"k":5},{"k":"5"},{"k":"Cat"}])",
        TableFormat::Json);
    const auto values = unique_values(data, "k");
    REQUIRE(values.size() == 4);
    CHECK(values[0] == Scalar("Dog"));
    CHECK(values[1] == Scalar("Cat"));
    CHECK(values[2] == Scalar(5.0));
    CHECK(values[3] == Scalar("5"));
    CHECK(unique_values(data, "absent").empty());
}

TEST_CASE("unique_values properties on random datasets") {
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<int> pick(0, 9);
    for (int iter = 0; iter < 200; ++iter) {
        Dataset data;
        const int n = pick(rng) * 4;
        for (int i = 0; i < n; ++i) {
            Row row;
            const int v = pick(rng);
            if (v == 9) {
                row.emplace_back("k", Scalar{});
            } else if (v >= 5) {
                row.emplace_back("k", Scalar("c" + std::to_string(v)));
            } else {
                row.emplace_back("k", Scalar(static_cast<double>(v)));
            }
            data.rows.push_back(std::move(row));
        }
        const auto values = unique_values(data, "k");

        for (std::size_t i = 0; i < values.size(); ++i) {
            CHECK(!values[i].is_null());
            for (std::size_t j = i + 1; j < values.size(); ++j) CHECK(!(values[i] == values[j]));
        }

        const auto first_index = [&](const Scalar& v) {
            for (std::size_t r = 0; r < data.rows.size(); ++r)
                if (get_field(data.rows[r], "k") == v) return r;
            return data.rows.size();
        };
        std::size_t covered = 0;
        for (const Row& row : data.rows) {
            const Scalar v = get_field(row, "k");
            if (v.is_null()) continue;
            bool present = false;
            for (const Scalar& u : values) present = present || u == v;
            CHECK(present);
            ++covered;
        }
        if (covered == 0) CHECK(values.empty());
        for (std::size_t i = 1; i < values.size(); ++i)
            CHECK(first_index(values[i - 1]) < first_index(values[i]));
    }
}
