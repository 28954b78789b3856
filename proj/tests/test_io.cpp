#include <doctest.h>

#include <cmath>
#include <limits>

#include "gstruve/io.hpp"

using namespace gstruve;

TEST_CASE("parse_complex") {
    CHECK(*parse_complex("1.5") == cplx(1.5, 0));
    CHECK(*parse_complex("-2i") == cplx(0, -2));
    CHECK(*parse_complex("0.3+0.1i") == cplx(0.3, 0.1));
    CHECK(*parse_complex("1e-3-2.5e-1i") == cplx(1e-3, -0.25));
    CHECK(*parse_complex("i") == cplx(0, 1));
    CHECK(*parse_complex("-i") == cplx(0, -1));
    CHECK(*parse_complex("2-i") == cplx(2, -1));
    CHECK_FALSE(parse_complex(""));
    CHECK_FALSE(parse_complex("abc"));
    CHECK_FALSE(parse_complex("1+2"));
    CHECK_FALSE(parse_complex("1i+2"));
    CHECK_FALSE(parse_complex("0.5x"));
}

TEST_CASE("series round trip") {
    const PowerSeries f(std::vector<cplx>{0, 1, {0.25, -3}});
    const json j = to_json(f);
    CHECK(j.dump() == "[[0.0,0.0],[1.0,0.0],[0.25,-3.0]]");
    CHECK(series_from_json(j) == f);

    CHECK_THROWS_AS(series_from_json(json::parse("[]")), Error);
    CHECK_THROWS_AS(series_from_json(json::parse("[[1]]")), Error);
    CHECK_THROWS_AS(series_from_json(json::parse("[[1, \"a\"]]")), Error);
    CHECK_THROWS_AS(series_from_json(json::parse("{\"a\": 1}")), Error);
    CHECK_THROWS_AS(read_series_file("/nonexistent/file.json"), Error);
}

TEST_CASE("verdict and bound report encodings") {
    Verdict v;
    v.passed = false;
    v.margin = -0.5;
    v.witness = cplx(0.1, -0.2);
    v.samples_used = 7;
    const json j = to_json(v);
    CHECK(j["passed"] == false);
    CHECK(j["witness"][1] == -0.2);
    CHECK(j["samples_used"] == 7);

    const json r = to_json(BoundReport{"re_bounds", {{"A", 1}}, 0.5, std::numeric_limits<double>::infinity(), std::nullopt});
    CHECK(r["upper"].is_null());
    CHECK(r["certificate_margin"].is_null());
    CHECK(r["lower"] == 0.5);
    CHECK(r["theorem_id"] == "re_bounds");
}
