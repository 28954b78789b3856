#include "gstruve/hypergeom.hpp"

#include <cmath>

#include "gstruve/quadrature.hpp"
#include "gstruve/specialfn.hpp"

namespace gstruve {

HypergeomParams::HypergeomParams(cplx a_, cplx b_, cplx c_) : a(a_), b(b_), c(c_) {
    if (is_nonpositive_integer(c)) throw Error(ErrorKind::Pole, "2F1 parameter c must not be a nonpositive integer");
}

F21Value f21_series_detailed(const HypergeomParams& hp, cplx z, double tol) {
    const double az = std::abs(z);
    if (!(az < 1.0)) throw Error(ErrorKind::Domain, "2F1 series requires |z| < 1", z);

    cplx term = 1.0;
    cplx sum = 1.0;
    for (std::size_t n = 0; n < kF21MaxTerms; ++n) {
        const double nn = static_cast<double>(n);
        const cplx ratio = (hp.a + nn) * (hp.b + nn) / ((hp.c + nn) * (nn + 1.0));
        term *= ratio * z;
        if (term == cplx{0.0, 0.0}) return {sum, n + 1, 0.0, F21Route::Series};
        sum += term;
        const double tail = std::abs(term) / (1.0 - az);
        // the geometric tail bound only holds once the term ratio has dropped below one
        if (tail < tol && std::abs(ratio) * az < 1.0) return {sum, n + 2, tail, F21Route::Series};
    }
    throw Error(ErrorKind::NonConvergence, "2F1 series did not converge within the term cap", z);
}

cplx f21_euler(const HypergeomParams& hp, cplx z, std::size_t nodes) {
    if (!(hp.b.real() > 0.0) || !(hp.c.real() > hp.b.real()))
        throw Error(ErrorKind::InvalidArgument, "Euler integral requires Re c > Re b > 0");
    if (z.imag() == 0.0 && z.real() >= 1.0) throw Error(ErrorKind::Domain, "Euler integral undefined on [1, inf)", z);

    const cplx left = hp.b - 1.0;
    const cplx right = hp.c - hp.b - 1.0;
    const auto rule = gauss_jacobi_unit(nodes, left.real(), right.real());
    const cplx left_osc{0.0, left.imag()};
    const cplx right_osc{0.0, right.imag()};

    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        const double t = rule->nodes[i];
        cplx g = std::exp(-hp.a * std::log(1.0 - t * z));
        if (left.imag() != 0.0) g *= std::exp(left_osc * std::log(t));
        if (right.imag() != 0.0) g *= std::exp(right_osc * std::log(1.0 - t));
        acc += rule->weights[i] * g;
    }
    return gamma(hp.c) / (gamma(hp.c - hp.b) * gamma(hp.b)) * acc;
}

F21Value f21_pfaff_detailed(const HypergeomParams& hp, cplx z, double tol) {
    if (z == cplx{1.0, 0.0}) throw Error(ErrorKind::Domain, "Pfaff transformation undefined at z = 1", z);
    const cplx w = z / (z - 1.0);
    if (!(std::abs(w) < 1.0)) throw Error(ErrorKind::Domain, "Pfaff argument z/(z-1) outside the unit disk", z);
    F21Value inner = f21_series_detailed(HypergeomParams(hp.a, hp.c - hp.b, hp.c), w, tol);
    const cplx prefactor = principal_pow(1.0 - z, -hp.a);
    return {prefactor * inner.value, inner.terms, std::abs(prefactor) * inner.error_estimate, F21Route::Pfaff};
}

double f21_symmetry_check(const HypergeomParams& hp, cplx z) {
    return std::abs(f21_series(hp, z) - f21_series(HypergeomParams(hp.b, hp.a, hp.c), z));
}

F21Value f21_detailed(const HypergeomParams& hp, cplx z, double tol) {
    const double az = std::abs(z);
    if (az <= 0.5) return f21_series_detailed(hp, z, tol);
    if (z.real() < 0.5 && z != cplx{1.0, 0.0}) {
        const double aw = std::abs(z / (z - 1.0));
        if (aw < az) return f21_pfaff_detailed(hp, z, tol);
    }
    if (az < 1.0) return f21_series_detailed(hp, z, tol);
    throw Error(ErrorKind::Domain, "2F1 argument outside the supported region", z);
}

}  // namespace gstruve
