#include "gstruve/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gstruve/operator.hpp"

namespace gstruve {

namespace {

constexpr std::size_t kNestingBoundarySamples = 360;

}  // namespace

MobiusTarget::MobiusTarget(double A, double B) : A_(A), B_(B) {
    if (!(B >= -1.0 && B < A && A <= 1.0)) throw Error(ErrorKind::InvalidArgument, "Moebius target needs -1 <= B < A <= 1");
}

double MobiusTarget::center() const noexcept { return (1.0 - A_ * B_) / (1.0 - B_ * B_); }

double MobiusTarget::radius() const noexcept { return (A_ - B_) / (1.0 - B_ * B_); }

ClassParams::ClassParams(double alpha_, cplx lambda_, double mu_, StruveParams struve_, MobiusTarget target_)
    : alpha(alpha_), lambda(lambda_), mu(mu_), struve(std::move(struve_)), target(target_) {
    if (!(std::abs(alpha) < std::numbers::pi / 2.0)) throw Error(ErrorKind::InvalidArgument, "|alpha| must be below pi/2");
    if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorKind::InvalidArgument, "mu must lie in (0, 1)");
}

cplx power_mu(cplx w, double mu) {
    if (w == cplx{0.0, 0.0}) throw Error(ErrorKind::Singular, "power_mu of zero");
    return std::exp(mu * std::log(w));
}

ClassEvaluator::ClassEvaluator(ClassParams params, const PowerSeries& f)
    : params_(std::move(params)),
      s_k_(apply_s(params_.struve, f)),
      s_k1_(apply_s(params_.struve.shifted(), f)) {}

void ClassEvaluator::check_point(cplx z) const {
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::Domain, "class functional is defined on |z| < 1", z);
}

cplx ClassEvaluator::s_k1_at(cplx z) const {
    const cplx s = s_k1_.evaluate(z);
    if (s == cplx{0.0, 0.0}) throw Error(ErrorKind::Singular, "S_{k+1} f vanishes", z);
    return s;
}

cplx ClassEvaluator::power_term(cplx z) const {
    check_point(z);
    if (z == cplx{0.0, 0.0}) return 1.0;
    return power_mu(z / s_k1_at(z), params_.mu);
}

cplx ClassEvaluator::ratio_term(cplx z) const {
    check_point(z);
    if (z == cplx{0.0, 0.0}) return 1.0;
    const cplx s1 = s_k1_at(z);
    return s_k_.evaluate(z) / s1 * power_mu(z / s1, params_.mu);
}

cplx ClassEvaluator::class_expression(cplx z) const {
    const cplx rot = std::polar(1.0, params_.alpha);
    check_point(z);
    if (z == cplx{0.0, 0.0}) return rot;
    const cplx s1 = s_k1_at(z);
    const cplx e1 = power_mu(z / s1, params_.mu);
    const cplx ratio = s_k_.evaluate(z) / s1;
    return rot * ((1.0 + params_.lambda) * e1 - params_.lambda * ratio * e1);
}

cplx ClassEvaluator::j_functional(cplx z) const {
    const cplx i_sin{0.0, std::sin(params_.alpha)};
    return (class_expression(z) - i_sin) / std::cos(params_.alpha);
}

cplx ClassEvaluator::p_functional(cplx z) const {
    const cplx i_sin{0.0, std::sin(params_.alpha)};
    return (std::polar(1.0, params_.alpha) * power_term(z) - i_sin) / std::cos(params_.alpha);
}

cplx class_expression(const ClassParams& cp, const PowerSeries& f, cplx z) {
    return ClassEvaluator(cp, f).class_expression(z);
}

cplx j_functional(const ClassParams& cp, const PowerSeries& f, cplx z) { return ClassEvaluator(cp, f).j_functional(z); }

double mobius_image_check(const MobiusTarget& target, cplx w) noexcept {
    if (target.is_half_plane()) return w.real() - target.half_plane_bound();
    return target.radius() - std::abs(w - target.center());
}

Verdict containment_verdict(const MobiusTarget& target, std::span<const Sample> samples, double tol) {
    Verdict v;
    v.samples_used = samples.size();
    if (samples.empty()) return v;
    double worst = mobius_image_check(target, samples.front().w);
    cplx where = samples.front().z;
    for (const Sample& s : samples.subspan(1)) {
        const double m = mobius_image_check(target, s.w);
        if (m < worst) {
            worst = m;
            where = s.z;
        }
    }
    v.margin = worst;
    v.passed = worst >= -tol;
    if (!v.passed) v.witness = where;
    return v;
}

std::vector<double> default_radii() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}; }

SampledFunction sample_j(const ClassParams& cp, const PowerSeries& f, std::span<const double> radii,
                         std::size_t points_per_circle) {
    if (points_per_circle == 0) throw Error(ErrorKind::InvalidArgument, "need at least one point per circle");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw Error(ErrorKind::InvalidArgument, "radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorKind::InvalidArgument, "radii must be ascending");
    }
    const ClassEvaluator eval(cp, f);
    SampledFunction out;
    out.reserve(radii.size() * points_per_circle);
    for (const double r : radii) {
        for (std::size_t j = 0; j < points_per_circle; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points_per_circle);
            const cplx z = std::polar(r, theta);
            out.push_back({z, eval.j_functional(z)});
        }
    }
    return out;
}

Verdict membership_test(const ClassParams& cp, const PowerSeries& f, std::span<const double> radii,
                        std::size_t points_per_circle) {
    const SampledFunction samples = sample_j(cp, f, radii, points_per_circle);
    return containment_verdict(cp.target, samples);
}

Verdict lemma6_check(const MobiusTarget& inner, const MobiusTarget& outer) {
    const double A2 = inner.A(), B2 = inner.B();
    const double A1 = outer.A(), B1 = outer.B();
    if (!(-1.0 <= B1 && B1 <= B2 && B2 < A2 && A2 <= A1 && A1 <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "lemma6_check needs -1 <= B1 <= B2 < A2 <= A1 <= 1");

    Verdict v;
    if (inner.is_half_plane()) {
        // both half-planes; ordering forces B1 = -1
        v.margin = inner.half_plane_bound() - outer.half_plane_bound();
        v.passed = v.margin >= -kContainmentTol;
        return v;
    }

    const double c2 = inner.center(), r2 = inner.radius();
    if (outer.is_half_plane()) {
        v.margin = (c2 - r2) - outer.half_plane_bound();
    } else {
        v.margin = outer.radius() - (std::abs(c2 - outer.center()) + r2);
    }
    v.passed = v.margin >= -kContainmentTol;

    // boundary of the inner disk, checked pointwise against the outer region
    double sampled_worst = 0.0;
    cplx where{};
    for (std::size_t j = 0; j < kNestingBoundarySamples; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / kNestingBoundarySamples;
        const cplx w = c2 + std::polar(r2, theta);
        const double m = mobius_image_check(outer, w);
        if (j == 0 || m < sampled_worst) {
            sampled_worst = m;
            where = w;
        }
    }
    v.samples_used = kNestingBoundarySamples;
    if (sampled_worst < -kContainmentTol) v.passed = false;
    if (!v.passed) v.witness = where;
    return v;
}

Verdict lemma3_check(const MobiusTarget& F, std::span<const Sample> f_vals, std::span<const Sample> g_vals,
                     double sigma) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw Error(ErrorKind::InvalidArgument, "sigma must lie in [0, 1]");
    if (f_vals.size() != g_vals.size()) throw Error(ErrorKind::InvalidArgument, "f and g need matching sample sets");
    for (std::size_t i = 0; i < f_vals.size(); ++i)
        if (f_vals[i].z != g_vals[i].z) throw Error(ErrorKind::InvalidArgument, "f and g sampled at different points");
    if (!containment_verdict(F, f_vals).passed || !containment_verdict(F, g_vals).passed)
        throw Error(ErrorKind::InvalidArgument, "lemma3_check needs f and g inside F");

    SampledFunction mix;
    mix.reserve(f_vals.size());
    for (std::size_t i = 0; i < f_vals.size(); ++i)
        mix.push_back({f_vals[i].z, sigma * f_vals[i].w + (1.0 - sigma) * g_vals[i].w});
    return containment_verdict(F, mix);
}

}  // namespace gstruve
