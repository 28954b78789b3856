#include "gstruve/bounds.hpp"

#include <cmath>
#include <numbers>

#include "gstruve/hypergeom.hpp"
#include "gstruve/quadrature.hpp"
#include "gstruve/rng.hpp"

namespace gstruve {

namespace {

// Below this |B| the A/B + (1 - A/B) F form cancels badly; use the Taylor sum.
constexpr double kSmallB = 1e-3;
constexpr double kQuadratureAgreement = 1e-13;
constexpr std::size_t kContourPoints = 64;

void require_positive_beta(const DominantParams& dp) {
    if (!(dp.beta() > 0.0)) throw Error(ErrorKind::InvalidArgument, "beta = mu k / lambda must be positive");
}

// beta int_0^1 (1 + A x t)/(1 + B x t) t^{beta-1} dt
//   = 1 + (A-B) sum_{n>=1} beta/(beta+n) (-B)^{n-1} x^n,   |Bx| small.
cplx averaged_mobius_taylor(double A, double B, double beta, cplx x) {
    cplx sum = 0.0;
    cplx power = x;  // (-B)^{n-1} x^n
    for (int n = 1; n < 200; ++n) {
        const cplx term = beta / (beta + n) * power;
        sum += term;
        if (std::abs(term) < 1e-18) break;
        power *= -B * x;
    }
    return 1.0 + (A - B) * sum;
}

// Same integral through A/B + (1 - A/B) 2F1(1, beta; beta+1; -Bx).
cplx averaged_mobius(double A, double B, double beta, cplx x) {
    if (B == 0.0) return 1.0 + beta / (beta + 1.0) * A * x;
    if (std::abs(B) < kSmallB) return averaged_mobius_taylor(A, B, beta, x);
    const cplx F = f21(HypergeomParams(1.0, beta, beta + 1.0), -B * x);
    return A / B + (1.0 - A / B) * F;
}

template <class Fn>
cplx contour_derivative(Fn&& fn, cplx z, double radius) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < kContourPoints; ++j) {
        const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / kContourPoints);
        acc += fn(z + radius * e) / e;
    }
    return acc / (static_cast<double>(kContourPoints) * radius);
}

}  // namespace

DominantParams::DominantParams(double beta, MobiusTarget target) : beta_(beta), target_(target) {
    if (!std::isfinite(beta) || beta < 0.0) throw Error(ErrorKind::InvalidArgument, "beta must be finite and >= 0");
}

DominantParams DominantParams::from_class(double lambda, double mu, double k, MobiusTarget target) {
    if (lambda == 0.0) throw Error(ErrorKind::InvalidArgument, "lambda must be nonzero");
    return DominantParams(mu * k / lambda, target);
}

QuadratureValue best_dominant_q_detailed(const DominantParams& dp, cplx z, std::size_t nodes) {
    require_positive_beta(dp);
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::Domain, "best dominant needs |z| < 1", z);
    if (nodes < 2) throw Error(ErrorKind::InvalidArgument, "best dominant needs at least two nodes");

    const MobiusTarget& phi = dp.target();
    const double beta = dp.beta();
    auto quad = [&](std::size_t n) {
        const auto rule = gauss_jacobi_unit(n, beta - 1.0, 0.0);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += rule->weights[i] * phi(z * rule->nodes[i]);
        return beta * acc;
    };

    cplx coarse = quad(nodes / 2);
    for (std::size_t n = nodes; n <= kDominantMaxNodes; n *= 2) {
        const cplx fine = quad(n);
        const double diff = std::abs(fine - coarse);
        if (diff <= kQuadratureAgreement * std::max(1.0, std::abs(fine))) return {fine, n, diff};
        coarse = fine;
    }
    throw Error(ErrorKind::NonConvergence, "best dominant quadrature did not settle", z);
}

cplx sharp_bound_h(const DominantParams& dp, cplx z) {
    require_positive_beta(dp);
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::Domain, "sharp bound needs |z| < 1", z);
    const double A = dp.target().A(), B = dp.target().B(), beta = dp.beta();
    if (B == 0.0) return 1.0 + beta / (beta + 1.0) * A * z;
    if (std::abs(B) < kSmallB) return averaged_mobius_taylor(A, B, beta, z);
    const cplx one_bz = 1.0 + B * z;
    if (one_bz == cplx{0.0, 0.0}) throw Error(ErrorKind::Singular, "1 + Bz vanishes", z);
    const cplx F = f21(HypergeomParams(1.0, 1.0, beta + 1.0), B * z / one_bz);
    return A / B + (1.0 - A / B) * F / one_bz;
}

double lower_bound_h_minus1(const DominantParams& dp) {
    require_positive_beta(dp);
    const MobiusTarget& t = dp.target();
    return averaged_mobius(t.A(), t.B(), dp.beta(), -1.0).real();
}

BoundPair re_bounds(const DominantParams& dp) {
    const MobiusTarget& t = dp.target();
    const double lower = averaged_mobius(t.A(), t.B(), dp.beta(), -1.0).real();
    if (t.is_half_plane()) return {lower, std::numeric_limits<double>::infinity()};
    return {lower, averaged_mobius(t.A(), t.B(), dp.beta(), 1.0).real()};
}

BoundPair modulus_bounds(const DominantParams& dp, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::Domain, "modulus bounds need 0 <= r < 1");
    const MobiusTarget& t = dp.target();
    return {averaged_mobius(t.A(), t.B(), dp.beta(), -r).real(), averaged_mobius(t.A(), t.B(), dp.beta(), r).real()};
}

double radius_positivity(double lambda, double mu, double k) {
    const double mk = mu * k;
    if (mk == 0.0) throw Error(ErrorKind::InvalidArgument, "mu k must be nonzero");
    const double c = std::abs(lambda / mk);
    // -c + sqrt(c^2+1) without cancellation
    return 1.0 / (c + std::hypot(c, 1.0));
}

double radius_factor(double lambda, double mu, double k, double r) {
    const double mk = mu * k;
    if (mk == 0.0) throw Error(ErrorKind::InvalidArgument, "mu k must be nonzero");
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::Domain, "radius factor needs 0 <= r < 1");
    const double c = std::abs(lambda / mk);
    return (1.0 - r * r - 2.0 * c * r) / (1.0 - r * r);
}

double starlike_closed_form(double B, double r, double psi) noexcept {
    const double br = B * r;
    const double re = 1.0 + br * std::cos(psi);
    const double im = br * std::sin(psi);
    return (1.0 - br * br) / (re * re + im * im);
}

cplx q_function(double A, double B, cplx z, double scale) noexcept {
    const cplx d = 1.0 + B * z;
    return scale * (A - B) * z / (d * d);
}

Verdict q_starlike_certificate(double A, double B, std::size_t grid_r, std::size_t grid_psi, std::uint64_t seed) {
    const MobiusTarget target(A, B);  // validates -1 <= B < A <= 1
    if (grid_r == 0 || grid_psi == 0) throw Error(ErrorKind::InvalidArgument, "starlike grid must be nonempty");

    Verdict v;
    bool first = true;
    cplx worst_z{};
    for (std::size_t i = 0; i < grid_r; ++i) {
        const double r = static_cast<double>(i + 1) / static_cast<double>(grid_r + 1);
        for (std::size_t j = 0; j < grid_psi; ++j) {
            const double psi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_psi);
            const double value = starlike_closed_form(B, r, psi);
            if (first || value < v.margin) {
                v.margin = value;
                worst_z = std::polar(r, psi);
                first = false;
            }
        }
    }
    v.samples_used = grid_r * grid_psi;
    v.passed = v.margin > 0.0;

    SeededRng rng(seed);
    for (std::size_t n = 0; n < kStarlikeCrossPoints; ++n) {
        const double r = rng.uniform(0.05, 0.95);
        const double psi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const cplx z = std::polar(r, psi);
        auto Q = [&](cplx w) { return q_function(target.A(), target.B(), w); };
        const cplx dQ = contour_derivative(Q, z, 0.5 * (1.0 - r));
        const double direct = (z * dQ / Q(z)).real();
        if (std::abs(direct - starlike_closed_form(B, r, psi)) > kStarlikeCrossTol) {
            v.passed = false;
            worst_z = z;
        }
    }
    v.samples_used += kStarlikeCrossPoints;
    if (!v.passed) v.witness = worst_z;
    return v;
}

double briot_bouquet_coefficient(double lambda, double mu, double k, CoefficientVariant variant) {
    if (mu * k == 0.0 || k == 0.0) throw Error(ErrorKind::InvalidArgument, "mu k must be nonzero");
    return variant == CoefficientVariant::Proof ? lambda / (mu * k) : lambda * mu / k;
}

cplx briot_bouquet_target(double A, double B, double coefficient, cplx z) noexcept {
    const cplx d = 1.0 + B * z;
    return (1.0 + A * z) / d + coefficient * (A - B) * z / (d * d);
}

double briot_bouquet_residual(double lambda, double mu, double k, double A, double B, cplx z,
                              CoefficientVariant variant) {
    const MobiusTarget g(A, B);
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::Domain, "residual needs |z| < 1", z);
    const cplx dg = contour_derivative(g, z, 0.5 * (1.0 - std::abs(z)));
    const double proof_coef = briot_bouquet_coefficient(lambda, mu, k, CoefficientVariant::Proof);
    const cplx lhs = g(z) + proof_coef * z * dg;
    return std::abs(lhs - briot_bouquet_target(A, B, briot_bouquet_coefficient(lambda, mu, k, variant), z));
}

cplx inclusion_interpolant(double lambda1, double lambda2, cplx h1, cplx h2) {
    if (!(lambda1 >= 0.0 && lambda1 < lambda2))
        throw Error(ErrorKind::InvalidArgument, "inclusion needs 0 <= lambda1 < lambda2");
    const double t = lambda1 / lambda2;
    return t * h1 + (1.0 - t) * h2;
}

cplx lambda_negative_identity(cplx lambda, cplx e1, cplx e2) {
    if (lambda == cplx{0.0, 0.0}) throw Error(ErrorKind::InvalidArgument, "lambda must be nonzero");
    return (1.0 + 1.0 / lambda) * e1 - (1.0 / lambda) * e2;
}

}  // namespace gstruve
