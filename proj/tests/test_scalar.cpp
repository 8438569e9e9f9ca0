#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <random>

#include "encgram/civil_time.hpp"
#include "encgram/json_util.hpp"
#include "encgram/scalar.hpp"

using namespace encgram;

TEST_CASE("scalar kinds and equality") {
    CHECK(Scalar{}.is_null());
    CHECK(Scalar(3.0).is_number());
    CHECK(Scalar(3).is_number());
    CHECK(Scalar("hi").is_text());
    CHECK(Scalar(true).is_boolean());
    CHECK(Scalar::timestamp(0).is_timestamp());

    CHECK(Scalar(2.0) == Scalar(2.0));
    CHECK_FALSE(Scalar(2.0) == Scalar("2"));
    CHECK_FALSE(Scalar(1.0) == Scalar::timestamp(1));
    CHECK(Scalar::timestamp(86400000) == Scalar::timestamp(86400000));
}

TEST_CASE("numeric coercion is strict, timestamp coercion is permissive") {
    CHECK(coerce_number(Scalar(4.5)) == 4.5);
    CHECK_FALSE(coerce_number(Scalar("4.5")).has_value());
    CHECK_FALSE(coerce_number(Scalar(true)).has_value());
    CHECK_FALSE(coerce_number(Scalar::timestamp(5)).has_value());

    CHECK(coerce_timestamp(Scalar::timestamp(77)) == 77);
    CHECK(coerce_timestamp(Scalar(1000.0)) == 1000);
    CHECK(coerce_timestamp(Scalar("1970-01-02")) == 86400000);
    CHECK_FALSE(coerce_timestamp(Scalar("yesterday")).has_value());
    CHECK_FALSE(coerce_timestamp(Scalar(true)).has_value());
}

TEST_CASE("iso8601 parsing accepts the documented shapes only") {
    CHECK(parse_iso8601("1970-01-01") == 0);
    CHECK(parse_iso8601("1970-01-01T00:00:00Z") == 0);
    CHECK(parse_iso8601("1970-01-02 01:00") == 86400000 + 3600000);
    CHECK(parse_iso8601("2024-02-29T12:30:15.250") ==
          19782LL * 86400000 + 12LL * 3600000 + 30 * 60000 + 15250);

    CHECK_FALSE(parse_iso8601("1970-1-1").has_value());
    CHECK_FALSE(parse_iso8601("1970-01-01T25:00").has_value());
    CHECK_FALSE(parse_iso8601("1970-13-01").has_value());
    CHECK_FALSE(parse_iso8601("2023-02-29").has_value());
    CHECK_FALSE(parse_iso8601("1970-01-01x").has_value());
    CHECK_FALSE(parse_iso8601("").has_value());
}

TEST_CASE("civil conversions agree with the std::chrono calendar") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> days(-200 * 365, 200 * 365);
    std::uniform_int_distribution<int> ms_of_day(0, 86399999);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t day = days(rng);
        const std::int64_t ms = day * kMsPerDay + ms_of_day(rng);
        const CivilTime civil = civil_from_epoch_ms(ms);

        using namespace std::chrono;
        const year_month_day ymd{sys_days{std::chrono::days{day}}};
        CHECK(civil.year == int(ymd.year()));
        CHECK(civil.month == int(unsigned(ymd.month())));
        CHECK(civil.day == int(unsigned(ymd.day())));
        CHECK(epoch_ms_from_civil(civil) == ms);
        CHECK(weekday_from_days(day) == int(weekday{sys_days{std::chrono::days{day}}}.c_encoding()));
    }
}

TEST_CASE("iso text emission matches the midnight rule and round-trips") {
    CHECK(iso8601_text(0) == "1970-01-01");
    CHECK(iso8601_text(86400000 + 3600000) == "1970-01-02T01:00");
    CHECK(iso8601_text(15250) == "1970-01-01T00:00:15.250");

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> stamps(-4'000'000'000'000LL, 4'000'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t ms = stamps(rng);
        CHECK(parse_iso8601(iso8601_text(ms)) == ms);
    }
}

TEST_CASE("strict json parsing reports duplicates and syntax errors with positions") {
    CHECK(parse_json_strict(R"({"a": 1})").ok());

    auto dup = parse_json_strict(R"({"a": 1, "a": 2})");
    REQUIRE_FALSE(dup.ok());
    CHECK(dup.error().path == "a");
    CHECK(dup.error().message == "duplicate key");

    auto nested = parse_json_strict(R"({"outer": {"x": 1, "x": 2}})");
    REQUIRE_FALSE(nested.ok());
    CHECK(nested.error().path == "outer.x");

    auto in_array = parse_json_strict(R"({"list": [{"k": 1, "k": 2}]})");
    REQUIRE_FALSE(in_array.ok());
    CHECK(in_array.error().path == "list[0].k");

    auto syntax = parse_json_strict("{\"a\": ");
    REQUIRE_FALSE(syntax.ok());
    CHECK(syntax.error().message.find("byte") != std::string::npos);

    CHECK_FALSE(parse_json_strict("1e999").ok());
    CHECK_FALSE(parse_json_strict("").ok());
}

TEST_CASE("json scalars convert both ways with integral doubles as integers") {
    CHECK(json_to_scalar(ordered_json(nullptr)).value().is_null());
    CHECK(json_to_scalar(ordered_json(36)).value() == Scalar(36.0));
    CHECK(json_to_scalar(ordered_json(1.5)).value() == Scalar(1.5));
    CHECK(json_to_scalar(ordered_json("x")).value() == Scalar("x"));
    CHECK(json_to_scalar(ordered_json(true)).value() == Scalar(true));
    CHECK_FALSE(json_to_scalar(ordered_json::array()).ok());
    CHECK_FALSE(json_to_scalar(ordered_json::object()).ok());

    CHECK(scalar_to_json(Scalar(36.0)).dump() == "36");
    CHECK(scalar_to_json(Scalar(36.5)).dump() == "36.5");
    CHECK(scalar_to_json(Scalar(-0.0)).dump() == "0");
    CHECK(scalar_to_json(Scalar::timestamp(0)).dump() == "\"1970-01-01\"");
    CHECK(scalar_to_json(Scalar{}).dump() == "null");
}
