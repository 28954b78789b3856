#include "gstruve/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "gstruve/bounds.hpp"
#include "gstruve/classes.hpp"
#include "gstruve/hypergeom.hpp"
#include "gstruve/io.hpp"
#include "gstruve/operator.hpp"
#include "gstruve/quadrature.hpp"
#include "gstruve/rng.hpp"

namespace gstruve {

namespace {

// Stream offsets keep the parameter draws of different suites independent.
enum Stream : std::uint64_t {
    kRecurrenceStream = 1000,
    kOdeStream = 2000,
    kHypergeomStream = 3000,
    kDominantStream = 4000,
    kRadiusStream = 5000,
    kStarlikeStream = 6000,
    kReBoundsStream = 7000,
    kModulusStream = 8000,
    kInclusionStream = 9000,
};

class Recorder {
public:
    Recorder(std::string suite, double tol) : report_{std::move(suite), {}}, tol_(tol) {}

    double tol() const noexcept { return tol_; }

    /// value <= tol passes
    void residual(const std::string& check, std::size_t trial, double value, std::optional<double> tol = {}) {
        const double t = tol.value_or(tol_);
        report_.checks.push_back({report_.suite, check, trial, value, t, std::isfinite(value) && value <= t});
    }
    /// value >= -tol passes
    void margin(const std::string& check, std::size_t trial, double value, std::optional<double> tol = {}) {
        const double t = tol.value_or(tol_);
        report_.checks.push_back({report_.suite, check, trial, value, t, std::isfinite(value) && value >= -t});
    }
    void flag(const std::string& check, std::size_t trial, bool ok) {
        report_.checks.push_back({report_.suite, check, trial, ok ? 1.0 : 0.0, 0.0, ok});
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
    double tol_;
};

StruveParams random_struve_params(SeededRng& rng) {
    const cplx p = rng.uniform_complex(-0.5, 2.0, -1.0, 1.0);
    const cplx b = rng.uniform_complex(0.0, 2.0, -0.5, 0.5);
    const cplx c = rng.uniform_complex(-3.0, 3.0, -3.0, 3.0);
    return StruveParams(p, b, c);
}

PowerSeries random_normalized_series(SeededRng& rng, std::size_t order) {
    std::vector<cplx> c(order + 1);
    c[0] = 0.0;
    c[1] = 1.0;
    for (std::size_t n = 2; n <= order; ++n) c[n] = rng.uniform_complex(-1.0, 1.0, -1.0, 1.0);
    return PowerSeries(std::move(c));
}

MobiusTarget random_target(SeededRng& rng, double b_lo, double b_hi) {
    const double B = rng.uniform(b_lo, b_hi);
    const double A = B + (1.0 - B) * (0.05 + 0.95 * rng.uniform());
    return MobiusTarget(A, B);
}

// beta int_0^1 t^{beta-1} (1 + s A t)/(1 + s B t) dt by Gauss-Jacobi, s = +-1.
double integral_representation(double A, double B, double beta, double sign, std::size_t nodes = 256) {
    const auto rule = gauss_jacobi_unit(nodes, beta - 1.0, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double t = rule->nodes[i];
        acc += rule->weights[i] * (1.0 + sign * A * t) / (1.0 + sign * B * t);
    }
    return beta * acc;
}

SuiteReport suite_recurrence(const SuiteOptions& o) {
    Recorder rec("recurrence", o.tol.value_or(1e-12));
    const std::size_t trials = o.trials.value_or(100);
    std::vector<StruveParams> params;
    SeededRng prng(o.seed, kRecurrenceStream);
    for (int i = 0; i < 20; ++i) params.push_back(random_struve_params(prng));

    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kRecurrenceStream + 1 + t);
        const PowerSeries f = random_normalized_series(rng, 32);
        double worst = 0.0;
        for (const StruveParams& sp : params) worst = std::max(worst, recurrence_residual(sp, f));
        rec.residual("recurrence_residual", t, worst);

        // the H_p and L_p special cases: z[S_{p+1} f]' = (p+3/2) S_p f - (p+1/2) S_{p+1} f
        const cplx p = rng.uniform_complex(-0.4, 2.0, -0.5, 0.5);
        worst = 0.0;
        for (const double c : {1.0, -1.0}) {
            const PowerSeries s0 = c > 0 ? apply_s_struve(p, f) : apply_s_modified(p, f);
            const PowerSeries s1 = c > 0 ? apply_s_struve(p + 1.0, f) : apply_s_modified(p + 1.0, f);
            const PowerSeries lhs = multiply_by_z(differentiate(s1));
            const PowerSeries rhs = linear_combine(p + 1.5, s0, -(p + 0.5), s1);
            worst = std::max(worst, max_coefficient_difference(lhs, rhs));
        }
        rec.residual("struve_special_case_recursion", t, worst);

        // c = 0 collapses the operator to f -> z
        const StruveParams degenerate(p, 1.0, 0.0);
        rec.residual("c_zero_maps_to_identity", t,
                     max_coefficient_difference(apply_s(degenerate, f), PowerSeries::identity(f.order())), 0.0);
    }
    return rec.take();
}

SuiteReport suite_ode(const SuiteOptions& o) {
    Recorder rec("ode", o.tol.value_or(1e-10));
    const std::size_t trials = o.trials.value_or(100);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kOdeStream + t);
        rec.residual("ode_residual_n", t, ode_residual_n(random_struve_params(rng), 32));
    }
    return rec.take();
}

SuiteReport suite_hypergeom(const SuiteOptions& o) {
    Recorder rec("hypergeom", o.tol.value_or(1e-9));
    const std::size_t trials = o.trials.value_or(50);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kHypergeomStream + t);
        const cplx a = rng.uniform_complex(-1.5, 2.0, -1.0, 1.0);
        const double b = rng.uniform(0.2, 2.0);
        const double c = b + rng.uniform(0.3, 2.0);
        cplx z;
        do z = rng.in_disk(0.85);
        while (z.real() > 0.35);
        const HypergeomParams hp(a, b, c);
        const cplx series = f21_series(hp, z);
        rec.residual("series_vs_euler", t, std::abs(series - f21_euler(hp, z)));
        rec.residual("series_vs_pfaff", t, std::abs(series - f21_pfaff(hp, z)));
        rec.residual("symmetry", t, f21_symmetry_check(hp, z));

        // b = c reduces to (1-z)^{-a} on |z| <= 0.9
        const cplx zb = rng.in_disk(0.9);
        rec.residual("binomial_reduction", t,
                     std::abs(f21_series(HypergeomParams(a, c, c), zb) - principal_pow(1.0 - zb, -a)), 1e-11);
    }
    rec.residual("log_anchor_2ln2", 0,
                 std::abs(f21_series(HypergeomParams(1.0, 1.0, 2.0), 0.5) - 2.0 * std::numbers::ln2), 1e-11);
    return rec.take();
}

DominantParams dominant_draw(SeededRng& rng, std::size_t trial) {
    // trial 0 pins the half-plane target and trial 1 the B = 0 branch
    MobiusTarget target = trial == 0 ? MobiusTarget(1.0, -1.0)
                          : trial == 1 ? MobiusTarget(rng.uniform(0.1, 1.0), 0.0)
                                       : random_target(rng, -1.0, 0.9);
    return DominantParams(rng.uniform(0.2, 5.0), target);
}

SuiteReport suite_dominant(const SuiteOptions& o) {
    Recorder rec("dominant", o.tol.value_or(1e-9));
    const std::size_t trials = o.trials.value_or(10);
    const std::vector<double> radii = default_radii();
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kDominantStream + t);
        const DominantParams dp = dominant_draw(rng, t);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const cplx z = rng.in_disk(0.95);
            worst = std::max(worst, std::abs(sharp_bound_h(dp, z) - best_dominant_q(dp, z)));
        }
        rec.residual("closed_form_vs_quadrature", t, worst);

        SampledFunction q_vals;
        for (const double r : radii)
            for (int j = 0; j < 360; ++j) {
                const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 360.0);
                q_vals.push_back({z, best_dominant_q(dp, z)});
            }
        rec.margin("q_in_target", t, containment_verdict(dp.target(), q_vals).margin);
    }
    return rec.take();
}

SuiteReport suite_radius(const SuiteOptions& o) {
    Recorder rec("radius", o.tol.value_or(1e-12));
    const std::size_t trials = o.trials.value_or(50);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kRadiusStream + t);
        const double c = 5.0 * (1.0 - rng.uniform());  // (0, 5]
        const double mu = rng.uniform(0.05, 0.95);
        const double k = rng.uniform(0.5, 4.0);
        const double lambda = (rng.uniform() < 0.5 ? -1.0 : 1.0) * c * mu * k;
        double lo = 0.0, hi = 1.0 - 1e-15;
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            (radius_factor(lambda, mu, k, mid) > 0.0 ? lo : hi) = mid;
        }
        rec.residual("bisection_root", t, std::abs(0.5 * (lo + hi) - radius_positivity(lambda, mu, k)));
    }
    rec.residual("lambda_equals_mu_k", 0, std::abs(radius_positivity(0.6, 0.5, 1.2) - (std::numbers::sqrt2 - 1.0)),
                 1e-14);
    return rec.take();
}

SuiteReport suite_starlike(const SuiteOptions& o) {
    Recorder rec("starlike", o.tol.value_or(0.0));
    const std::size_t trials = o.trials.value_or(20);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kStarlikeStream + t);
        const MobiusTarget target = random_target(rng, -0.99, 0.99);
        const Verdict v = q_starlike_certificate(target.A(), target.B(), 50, 360, rng.next());
        rec.flag("re_zQprime_over_Q_positive", t, v.passed && v.margin > 0.0);
    }
    return rec.take();
}

SuiteReport suite_re_bounds(const SuiteOptions& o) {
    Recorder rec("re-bounds", o.tol.value_or(1e-8));
    const std::size_t trials = o.trials.value_or(10);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kReBoundsStream + t);
        const MobiusTarget target = random_target(rng, -0.9, 0.9);
        const DominantParams dp(rng.uniform(0.2, 5.0), target);
        const BoundPair rb = re_bounds(dp);
        rec.residual("lower_vs_integral", t,
                     std::abs(rb.lower - integral_representation(target.A(), target.B(), dp.beta(), -1.0)));
        rec.residual("upper_vs_integral", t,
                     std::abs(rb.upper - integral_representation(target.A(), target.B(), dp.beta(), 1.0)));
        rec.residual("lower_equals_h_minus1", t, std::abs(rb.lower - lower_bound_h_minus1(dp)));
        rec.margin("ordered", t, rb.upper - rb.lower);
    }
    return rec.take();
}

SuiteReport suite_modulus_bounds(const SuiteOptions& o) {
    Recorder rec("modulus-bounds", o.tol.value_or(1e-6));
    const std::size_t trials = o.trials.value_or(10);
    const std::vector<double> rs = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999, 1.0 - 1e-6, 1.0 - 1e-10};
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kModulusStream + t);
        const MobiusTarget target = random_target(rng, -0.9, 0.9);
        const DominantParams dp(rng.uniform(0.2, 5.0), target);
        const BoundPair rb = re_bounds(dp);
        BoundPair prev = modulus_bounds(dp, 0.0);
        rec.residual("unit_at_origin", t, std::max(std::abs(prev.lower - 1.0), std::abs(prev.upper - 1.0)), 1e-15);
        double worst_step = 0.0;
        for (std::size_t i = 1; i < rs.size(); ++i) {
            const BoundPair cur = modulus_bounds(dp, rs[i]);
            worst_step = std::min({worst_step, prev.lower - cur.lower, cur.upper - prev.upper});
            prev = cur;
        }
        rec.margin("monotone_nesting", t, worst_step, 1e-14);
        rec.residual("limit_equals_re_bounds", t,
                     std::max(std::abs(prev.lower - rb.lower), std::abs(prev.upper - rb.upper)));
    }
    return rec.take();
}

SuiteReport suite_inclusion(const SuiteOptions& o) {
    Recorder rec("inclusion", o.tol.value_or(1e-9));
    const std::size_t trials = o.trials.value_or(100);
    for (std::size_t t = 0; t < trials; ++t) {
        SeededRng rng(o.seed, kInclusionStream + t);

        // ordered quadruple -1 <= B1 <= B2 < A2 <= A1 <= 1
        double q[4];
        for (double& x : q) x = rng.uniform(-1.0, 1.0);
        std::sort(q, q + 4);
        if (q[1] == q[2]) q[2] = std::nextafter(q[2], 2.0);
        const MobiusTarget outer(q[3], q[0]), inner(q[2], q[1]);
        rec.margin("nested_target_containment", t, lemma6_check(inner, outer).margin);

        // convex combinations of two interior sampled functions stay inside
        const MobiusTarget F = random_target(rng, -1.0, 0.9);
        SampledFunction f_vals, g_vals;
        for (int i = 0; i < 64; ++i) {
            const cplx z = rng.in_disk(0.95);
            f_vals.push_back({z, F(rng.in_disk(0.99))});
            g_vals.push_back({z, F(rng.in_disk(0.99))});
        }
        const double sigma = rng.uniform();
        rec.margin("convex_combination_containment", t, lemma3_check(F, f_vals, g_vals, sigma).margin);

        const double l2 = rng.uniform(0.1, 5.0);
        const double l1 = l2 * rng.uniform();
        const cplx mix = inclusion_interpolant(l1, l2, f_vals[0].w, g_vals[0].w);
        rec.margin("inclusion_interpolant_inside", t, mobius_image_check(F, mix));
    }

    // lambda <= -1 rearrangement recovers the ratio term from e1 and e2
    SeededRng rng(o.seed, kInclusionStream + trials);
    const PowerSeries f = [&] {
        std::vector<cplx> c(17, cplx{0.0, 0.0});
        c[1] = 1.0;
        for (std::size_t n = 2; n < c.size(); ++n) c[n] = 0.1 * rng.uniform_complex(-1.0, 1.0, -1.0, 1.0);
        return PowerSeries(std::move(c));
    }();
    const double lambda = -1.0 - 4.0 * rng.uniform();
    const ClassParams cp(0.0, lambda, 0.5, StruveParams(0.5, 1.0, 1.0), MobiusTarget(1.0, -1.0));
    const ClassEvaluator eval(cp, f);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
        const cplx z = rng.in_disk(0.9);
        const cplx got = lambda_negative_identity(lambda, eval.power_term(z), eval.class_expression(z));
        worst = std::max(worst, std::abs(got - eval.ratio_term(z)));
    }
    rec.residual("lambda_negative_identity", 0, worst, 1e-12);
    return rec.take();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> table = {
        {"recurrence", suite_recurrence}, {"ode", suite_ode},
        {"hypergeom", suite_hypergeom},   {"dominant", suite_dominant},
        {"radius", suite_radius},         {"starlike", suite_starlike},
        {"re-bounds", suite_re_bounds},   {"modulus-bounds", suite_modulus_bounds},
        {"inclusion", suite_inclusion},
    };
    return table;
}

}  // namespace

std::size_t SuiteReport::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"recurrence", "ode",      "hypergeom",      "dominant", "radius",
                                                   "starlike",   "re-bounds", "modulus-bounds", "inclusion"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    const auto& table = registry();
    const auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
    return it->second(options);
}

nlohmann::json to_json(const CheckResult& c) {
    return {{"suite", c.suite}, {"check", c.check},   {"trial", c.trial},
            {"value", c.value}, {"tol", c.tol},       {"passed", c.passed}};
}

nlohmann::json summary_json(const SuiteReport& r) {
    return {{"summary", {{"suite", r.suite}, {"checks", r.checks.size()}, {"failures", r.failures()}, {"passed", r.passed()}}}};
}

}  // namespace gstruve
