#include <doctest.h>

#include <cmath>

#include "gstruve/operator.hpp"
#include "gstruve/rng.hpp"

using namespace gstruve;

namespace {

PowerSeries series(std::initializer_list<cplx> c) { return PowerSeries(std::vector<cplx>(c)); }

PowerSeries random_normalized(SeededRng& rng, std::size_t order) {
    std::vector<cplx> c(order + 1);
    c[1] = 1.0;
    for (std::size_t n = 2; n <= order; ++n) c[n] = rng.uniform_complex(-1, 1, -1, 1);
    return PowerSeries(std::move(c));
}

// Recurrence written out by hand for real parameters, coefficients from tgamma.
double hand_recurrence(double p, double b, double c, const PowerSeries& f) {
    const auto coef = [&](double kk, std::size_t n) {
        return std::pow(-c / 4.0, static_cast<double>(n)) * std::tgamma(1.5) * std::tgamma(kk) /
               (std::tgamma(1.5 + n) * std::tgamma(kk + n));
    };
    const double k = p + (b + 2) / 2;
    double worst = 0.0;
    for (std::size_t m = 1; m <= f.order(); ++m) {
        const cplx sk = coef(k, m - 1) * f[m];
        const cplx sk1 = coef(k + 1, m - 1) * f[m];
        worst = std::max(worst, std::abs(static_cast<double>(m) * sk1 - k * sk + (k - 1) * sk1));
    }
    return worst;
}

}  // namespace

TEST_CASE("phi_series") {
    const PowerSeries flat = phi_series(StruveParams(0.5, 1, 0), 6);
    CHECK(flat == PowerSeries::identity(6));

    const PowerSeries phi = phi_series(StruveParams(0.5, 1, 1), 6);
    CHECK(phi[0] == cplx(0.0));
    CHECK(phi[1] == cplx(1.0));
    CHECK(std::abs(phi[2] + 1.0 / 12.0) < 1e-16);

    const PowerSeries rnd = phi_series(StruveParams({0.2, 0.4}, {1.5, -0.1}, {-2, 1}), 6);
    CHECK(rnd[1] == cplx(1.0));
}

TEST_CASE("apply_s") {
    const StruveParams half(0.5, 1, 1);
    CHECK(apply_s(half, PowerSeries::identity(8)) == PowerSeries::identity(8));
    CHECK(apply_s(StruveParams(0.5, 1, 0), series({0, 1, 1})) == series({0, 1, 0}));
    CHECK(max_coefficient_difference(apply_s(half, series({0, 1, 1})), series({0, 1, -1.0 / 12})) < 1e-16);
    CHECK_THROWS_AS(apply_s(half, series({0, 2, 1})), Error);
    CHECK_THROWS_AS(apply_s(half, series({0.1, 1, 1})), Error);
    CHECK(convolve_with_phi(half, series({0, 2, 1}))[1] == cplx(2.0));
}

TEST_CASE("special cases H and L") {
    const PowerSeries f = series({0, 1, 1});
    CHECK(max_coefficient_difference(apply_s_struve(0.5, f), series({0, 1, -1.0 / 12})) < 1e-16);
    CHECK(max_coefficient_difference(apply_s_modified(0.5, f), series({0, 1, 1.0 / 12})) < 1e-16);
    CHECK(apply_s_struve(0.3, PowerSeries::identity(4)) == PowerSeries::identity(4));
    CHECK(apply_s_modified(0.3, PowerSeries::identity(4)) == PowerSeries::identity(4));

    // z [S_{p+1} f]' = (p + 3/2) S_p f - (p + 1/2) S_{p+1} f
    SeededRng rng(3);
    for (int i = 0; i < 20; ++i) {
        const PowerSeries g = random_normalized(rng, 32);
        const cplx p = rng.uniform_complex(-0.4, 2, -0.5, 0.5);
        for (auto apply : {&apply_s_struve, &apply_s_modified}) {
            const PowerSeries lhs = multiply_by_z(differentiate(apply(p + 1.0, g)));
            const PowerSeries rhs = linear_combine(p + 1.5, apply(p, g), -(p + 0.5), apply(p + 1.0, g));
            CHECK(max_coefficient_difference(lhs, rhs) <= 1e-13);
        }
    }
}

TEST_CASE("recurrence residual") {
    CHECK(recurrence_residual(StruveParams(0.5, 1, 1), PowerSeries::identity(16)) == 0.0);

    SeededRng rng(9);
    for (int i = 0; i < 20; ++i) {
        const PowerSeries f = random_normalized(rng, 32);
        CHECK(recurrence_residual(StruveParams(0.5, 1, 1), f) <= 1e-13);

        const double p = rng.uniform(-0.4, 2), b = rng.uniform(0, 2), c = rng.uniform(-3, 3);
        const double lib = recurrence_residual(StruveParams(p, b, c), f);
        CHECK(lib <= 1e-12);
        CHECK(hand_recurrence(p, b, c, f) <= 1e-12);
    }

    for (int i = 0; i < 100; ++i) {
        const PowerSeries f = random_normalized(rng, 32);
        const StruveParams sp(rng.uniform_complex(-0.5, 2, -1, 1), rng.uniform_complex(0, 2, -0.5, 0.5),
                              rng.uniform_complex(-3, 3, -3, 3));
        CHECK(recurrence_residual(sp, f) <= 1e-12);
    }
}
