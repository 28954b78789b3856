#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gstruve/rng.hpp"
#include "gstruve/specialfn.hpp"

using namespace gstruve;

namespace {

// Independent term-by-term summation of the Struve series, each term built
// from std::tgamma (real p only).
double struve_oracle(double p, double z, double sign, int terms) {
    double sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double t = std::pow(sign, n) * std::pow(z / 2.0, 2 * n + p + 1) /
                          (std::tgamma(n + 1.5) * std::tgamma(n + p + 1.5));
        sum += t;
    }
    return sum;
}

}  // namespace

TEST_CASE("StruveParams derives k") {
    const StruveParams sp(0.5, 1.0, 1.0);
    CHECK(sp.k() == cplx(2.0));
    CHECK(2.0 * sp.p() + sp.b() == 2.0 * sp.k() - 2.0);
    CHECK(sp.shifted().k() == cplx(3.0));
    CHECK_THROWS_AS(StruveParams(-2.0, 0.0, 1.0), Error);  // k = -1
    CHECK_THROWS_AS(StruveParams(-1.0, 0.0, 1.0), Error);  // k = 0
    CHECK_NOTHROW(StruveParams(-1.0, 0.0 + 1e-6, 1.0));
}

TEST_CASE("gamma") {
    CHECK(std::abs(gstruve::gamma(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(gstruve::gamma(0.5) - 1.7724538509055160) < 1e-14);
    CHECK(std::abs(gstruve::gamma(1.0) - 1.0) < 1e-14);

    // frozen high-precision values
    CHECK(std::abs(gstruve::gamma({0.3, 2.0}) - cplx(0.0574653375695880335, -0.0749849125826461382)) < 1e-14);
    CHECK(std::abs(gstruve::gamma({-2.5, 0.7}) - cplx(-0.159818716362932930, -0.157566549081515284)) < 1e-14);

    // agrees with tgamma on the real line, including the reflected half
    for (double x : {-3.7, -0.4, 0.1, 1.3, 7.25, 20.5}) {
        CAPTURE(x);
        CHECK(std::abs(gstruve::gamma(cplx(x)).real() / std::tgamma(x) - 1.0) < 1e-13);
    }

    // Gamma(z+1) = z Gamma(z) on complex draws
    SeededRng rng(7);
    for (int i = 0; i < 50; ++i) {
        const cplx z = rng.uniform_complex(-4.5, 6.0, -3.0, 3.0);
        CHECK(std::abs(gstruve::gamma(z + 1.0) - z * gstruve::gamma(z)) <= 1e-12 * std::abs(gstruve::gamma(z + 1.0)));
    }

    CHECK_THROWS_AS(gstruve::gamma(0.0), Error);
    CHECK_THROWS_AS(gstruve::gamma(-3.0), Error);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(1.5, 0) == cplx(1.0));
    CHECK(std::abs(pochhammer(1.5, 2) - 3.75) < 1e-15);
    const cplx k{0.3, -1.1};
    CHECK(pochhammer(k, 1) == k);
    CHECK(std::abs(pochhammer(k, 6) - gstruve::gamma(k + 6.0) / gstruve::gamma(k)) < 1e-12 * std::abs(pochhammer(k, 6)));
}

TEST_CASE("principal_pow") {
    CHECK(principal_pow(0.0, 0.5) == cplx(0.0));
    CHECK(principal_pow(0.0, 0.0) == cplx(1.0));
    CHECK_THROWS_AS(principal_pow(0.0, -0.5), Error);
    CHECK(std::abs(principal_pow(cplx(0, 1), 0.5) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("struve_h") {
    CHECK(struve_h(1.0, 0.0, 40) == cplx(0.0));
    // H_{1/2}(z) = sqrt(2/(pi z)) (1 - cos z)
    CHECK(std::abs(struve_h(0.5, std::numbers::pi, 40) - 0.900316316157106070) < 1e-14);
    CHECK(std::abs(struve_h(0.5, std::numbers::pi, 40) - 2.0 * std::numbers::sqrt2 / std::numbers::pi) < 1e-14);

    CHECK(std::abs(struve_h(0.0, 1.0, 40) - struve_oracle(0.0, 1.0, -1.0, 200)) < 1e-12);
    CHECK(std::abs(struve_h(0.0, 1.0, 40) - 0.568656627048287951) < 1e-14);

    const Summation s = struve_h_sum(0.0, 1.0, 10);
    CHECK(s.terms == 10);
    CHECK(s.last_term < 1e-15);
}

TEST_CASE("struve_l") {
    CHECK(struve_l(1.0, 0.0, 40) == cplx(0.0));
    CHECK(std::abs(struve_l(0.0, 0.5, 40) - struve_oracle(0.0, 0.5, 1.0, 200)) < 1e-12);
    CHECK(std::abs(struve_l(0.0, 0.5, 40) - 0.327240699394180780) < 1e-14);

    // L_p(z) = -i e^{-i p pi/2} H_p(iz)
    const cplx i{0, 1};
    const cplx p = 0.5, z = 0.3;
    const cplx rhs = -i * std::exp(-i * p * std::numbers::pi / 2.0) * struve_h(p, i * z, 40);
    CHECK(std::abs(struve_l(p, z, 40) - rhs) < 1e-11);
}

TEST_CASE("generalized_m specializes to H and L") {
    CHECK(std::abs(generalized_m(StruveParams(0.25, 1, 1), 0.4, 40) - struve_h(0.25, 0.4, 40)) < 1e-13);
    CHECK(std::abs(generalized_m(StruveParams(0.25, 1, -1), 0.4, 40) - struve_l(0.25, 0.4, 40)) < 1e-13);
    CHECK(generalized_m(StruveParams(0.5, 1, 1), 0.0, 40) == cplx(0.0));
}

TEST_CASE("normalized_n_series") {
    const PowerSeries n = normalized_n_series(StruveParams(0.5, 1, 1), 8);
    CHECK(n.order() == 8);
    CHECK(n[0] == cplx(1.0));
    CHECK(std::abs(n[1] + 1.0 / 12.0) < 1e-16);

    const PowerSeries flat = normalized_n_series(StruveParams(0.5, 1, 0), 8);
    for (std::size_t i = 1; i <= 8; ++i) CHECK(flat[i] == cplx(0.0));

    // closed form (-c/4)^n / ((3/2)_n (k)_n) with tgamma for real params
    const double p = 0.7, b = 2.0, c = -1.3, k = p + (b + 2) / 2;
    const PowerSeries m = normalized_n_series(StruveParams(p, b, c), 12);
    for (int i = 0; i <= 12; ++i) {
        const double expect = std::pow(-c / 4.0, i) * std::tgamma(1.5) * std::tgamma(k) /
                              (std::tgamma(1.5 + i) * std::tgamma(k + i));
        CHECK(std::abs(m[i] - expect) <= 1e-14 * std::abs(expect) + 1e-300);
    }

    // N relates back to M: M(z) = (z/2)^{p+1}/(Gamma(3/2)Gamma(k)) N(z^2) for b=c=1
    const StruveParams sp(0.25, 1, 1);
    const double z = 0.8;
    const cplx lead = std::pow(z / 2.0, 1.25) / (std::tgamma(1.5) * std::tgamma(sp.k().real()));
    CHECK(std::abs(lead * normalized_n_series(sp, 30).evaluate(z * z) - generalized_m(sp, z, 40)) < 1e-14);
}

TEST_CASE("ode_residual_n") {
    CHECK(ode_residual_n(StruveParams(0.5, 1, 1), 32) <= 1e-12);
    CHECK(ode_residual_n(StruveParams(0.5, 1, 0), 32) == 0.0);
    CHECK_THROWS_AS(ode_residual_n(StruveParams(0.5, 1, 1), 1), Error);

    SeededRng rng(11);
    for (int i = 0; i < 100; ++i) {
        const cplx p = rng.uniform_complex(-0.9, 3, -2, 2);
        const cplx b = rng.uniform_complex(-0.9, 3, -2, 2);
        const cplx c = rng.uniform_complex(-3, 3, -3, 3);
        CHECK(ode_residual_n(StruveParams(p, b, c), 32) <= 1e-10);
    }
}
