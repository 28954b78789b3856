#include <doctest.h>

#include "gstruve/series.hpp"

using namespace gstruve;

namespace {

PowerSeries series(std::initializer_list<cplx> c) { return PowerSeries(std::vector<cplx>(c)); }

}  // namespace

TEST_CASE("hadamard product") {
    CHECK(hadamard(series({0, 1, 1}), series({0, 1, 2})) == series({0, 1, 2}));
    CHECK(hadamard(series({0, 1, 0, 3}), series({0, 1, 0, -1})) == series({0, 1, 0, -3}));

    const PowerSeries f = series({0, 1, {0.5, -2}, 3, {0, 1}});
    CHECK(hadamard(f, PowerSeries::geometric(4)) == f);
    CHECK(hadamard(f, PowerSeries::geometric(2)).order() == 2);
}

TEST_CASE("differentiate") {
    CHECK(differentiate(series({0, 1})) == series({1}));
    CHECK(differentiate(series({0, 1, 0, 4})) == series({1, 0, 12}));
    CHECK(differentiate(series({5, 0})) == series({0}));
    CHECK_THROWS_AS(differentiate(series({5})), Error);
}

TEST_CASE("multiply_by_z keeps every coefficient") {
    const PowerSeries f = series({1, 2, 3});
    CHECK(multiply_by_z(f) == series({0, 1, 2, 3}));
}

TEST_CASE("evaluate") {
    const PowerSeries f = series({0, 1, 1});
    CHECK(f.evaluate(0.0) == cplx(0.0));
    CHECK(std::abs(evaluate(f, 0.5) - 0.75) == doctest::Approx(0.0));

    // sum_{n=1}^{64} 0.5^n = 1 - 2^-64
    CHECK(std::abs(PowerSeries::geometric(64, 1).evaluate(0.5) - 1.0) < 1e-12);

    const cplx z{0.3, -0.4};
    const PowerSeries g = series({1, {0, 2}, -3});
    CHECK(std::abs(g.evaluate(z) - (1.0 + cplx(0, 2) * z - 3.0 * z * z)) < 1e-15);
}

TEST_CASE("linear_combine") {
    const PowerSeries f = series({0, 1});
    const PowerSeries g = series({0, 1, 1});
    CHECK(linear_combine(1, f, 0, g) == series({0, 1, 0}));
    CHECK(max_coefficient_difference(linear_combine(0.5, g, 0.5, g), g) < 1e-16);
    CHECK(max_coefficient_difference(linear_combine(0.3, f, 0.7, g), series({0, 1, 0.7})) < 1e-15);
    CHECK(max_coefficient_difference(f, g) == 1.0);
}

TEST_CASE("normalization and construction") {
    CHECK(PowerSeries::identity(5).is_normalized());
    CHECK_FALSE(series({1, 1}).is_normalized());
    CHECK_FALSE(series({0}).is_normalized());
    CHECK(series({1e-15, 1.0 + 1e-15}).is_normalized(1e-14));
    CHECK_THROWS_AS(PowerSeries(std::vector<cplx>{}), Error);
    CHECK_THROWS_AS(series({0, 1})[2], std::out_of_range);
}
