#include "gstruve/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace gstruve {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;

// Godfrey's 15-term coefficient set for g = 607/128.
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

cplx lanczos(cplx z) {
    // valid for Re z >= 1/2
    z -= 1.0;
    cplx x = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) x += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(log_sqrt_2pi + (z + 0.5) * std::log(t) - t) * x;
}

// Shared kernel for the three Struve-type sums:
//   sum_n sign^n c^n (z/2)^{2n+p+1} / (Gamma(n+3/2) Gamma(n + shift))
// with first term (z/2)^{p+1} / (Gamma(3/2) Gamma(shift)).
Summation struve_kernel(cplx p, cplx shift, cplx c_factor, cplx z, std::size_t terms) {
    if (terms < 1) throw Error(ErrorKind::InvalidArgument, "struve series needs at least one term");
    const cplx half_z = 0.5 * z;
    const cplx lead = principal_pow(half_z, p + 1.0);
    const cplx denom = gamma(cplx{1.5, 0.0}) * gamma(shift);
    cplx term = lead / denom;
    cplx sum = term;
    const cplx step = -c_factor * half_z * half_z;
    for (std::size_t n = 1; n < terms; ++n) {
        const double nn = static_cast<double>(n);
        term *= step / ((nn + 0.5) * (shift + nn - 1.0));
        sum += term;
    }
    return {sum, terms, std::abs(term)};
}

}  // namespace

StruveParams::StruveParams(cplx p, cplx b, cplx c) : p_(p), b_(b), c_(c), k_(p + (b + 2.0) / 2.0) {
    if (is_nonpositive_integer(k_))
        throw Error(ErrorKind::Pole, "k = p + (b+2)/2 must not be a nonpositive integer");
}

bool is_nonpositive_integer(cplx z, double tol) noexcept {
    if (std::abs(z.imag()) > tol || z.real() > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

cplx principal_pow(cplx z, cplx w) {
    if (z == cplx{0.0, 0.0}) {
        if (w == cplx{0.0, 0.0}) return 1.0;
        if (w.real() > 0.0) return 0.0;
        throw Error(ErrorKind::Domain, "0 raised to a power with nonpositive real part");
    }
    return std::exp(w * std::log(z));
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z, 0.0)) throw Error(ErrorKind::Pole, "gamma pole", z);
    if (z.real() < 0.5) {
        const cplx s = std::sin(std::numbers::pi * z);
        if (s == cplx{0.0, 0.0}) throw Error(ErrorKind::Pole, "gamma pole", z);
        return std::numbers::pi / (s * lanczos(1.0 - z));
    }
    return lanczos(z);
}

cplx pochhammer(cplx g, std::size_t n) noexcept {
    cplx prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) prod *= g + static_cast<double>(j);
    return prod;
}

Summation struve_h_sum(cplx p, cplx z, std::size_t terms) {
    return struve_kernel(p, p + 1.5, 1.0, z, terms);
}

Summation struve_l_sum(cplx p, cplx z, std::size_t terms) {
    return struve_kernel(p, p + 1.5, -1.0, z, terms);
}

Summation generalized_m_sum(const StruveParams& params, cplx z, std::size_t terms) {
    return struve_kernel(params.p(), params.k(), params.c(), z, terms);
}

PowerSeries normalized_n_series(const StruveParams& params, std::size_t order) {
    std::vector<cplx> a(order + 1);
    a[0] = 1.0;
    const cplx step = -params.c() / 4.0;
    for (std::size_t n = 1; n <= order; ++n) {
        const double nn = static_cast<double>(n);
        a[n] = a[n - 1] * step / ((nn + 0.5) * (params.k() + nn - 1.0));
    }
    return PowerSeries(std::move(a));
}

double ode_residual_n(const StruveParams& params, std::size_t order) {
    if (order < 2) throw Error(ErrorKind::InvalidArgument, "ode residual needs order >= 2");
    const PowerSeries w = normalized_n_series(params, order);
    const cplx s = 2.0 * params.p() + params.b();
    double worst = 0.0;
    for (std::size_t n = 0; n < order; ++n) {
        const double nn = static_cast<double>(n);
        cplx r = (4.0 * nn * (nn - 1.0) + 2.0 * (s + 3.0) * nn + s) * w[n];
        if (n > 0) r += params.c() * w[n - 1];
        if (n == 0) r -= s;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace gstruve
