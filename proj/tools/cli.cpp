#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gstruve/bounds.hpp"
#include "gstruve/classes.hpp"
#include "gstruve/hypergeom.hpp"
#include "gstruve/io.hpp"
#include "gstruve/operator.hpp"
#include "gstruve/specialfn.hpp"
#include "gstruve/verify.hpp"

namespace gstruve::cli {

namespace {

// Raised for flag values that parse as strings but not as numbers.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx complex_flag(const std::string& name, const std::string& text) {
    const auto v = parse_complex(text);
    if (!v) throw UsageError("--" + name + ": cannot parse '" + text + "' as a complex number");
    return *v;
}

struct EvalArgs {
    std::string target;
    std::string p = "0", b = "1", c = "1", z = "0";
    std::string a = "1";
    double A = 1.0, B = -1.0, beta = 1.0;
    std::size_t terms = 40, order = kDefaultOrder, nodes = kDominantNodes;
    double tol = kF21Tolerance;
};

struct MemberArgs {
    std::string coeffs;
    double alpha = 0.0;
    std::string lambda = "0";
    double mu = 0.5;
    std::string p = "0.5", b = "1", c = "1";
    double A = 1.0, B = -1.0;
    std::vector<double> radii = default_radii();
    std::size_t points = kDefaultPointsPerCircle;
    std::string dump;
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::optional<double> tol;
};

struct BoundsArgs {
    double A = 1.0, B = -1.0;
    std::optional<double> beta;
    std::optional<double> lambda, mu, k;
    double r = 0.5;
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
    json input = {{"target", args.target}};
    json value;
    json count = nullptr;
    double est = 0.0;

    const cplx z = complex_flag("z", args.z);
    input["z"] = to_json(z);
    const auto struve_params = [&] {
        const cplx p = complex_flag("p", args.p), b = complex_flag("b", args.b), c = complex_flag("c", args.c);
        input["p"] = to_json(p);
        input["b"] = to_json(b);
        input["c"] = to_json(c);
        return StruveParams(p, b, c);
    };

    const std::string& t = args.target;
    if (t == "struve-h" || t == "struve-l") {
        const cplx p = complex_flag("p", args.p);
        input["p"] = to_json(p);
        input["terms"] = args.terms;
        const Summation s = t == "struve-h" ? struve_h_sum(p, z, args.terms) : struve_l_sum(p, z, args.terms);
        value = to_json(s.value);
        count = s.terms;
        est = s.last_term;
    } else if (t == "struve-m") {
        const StruveParams sp = struve_params();
        input["terms"] = args.terms;
        const Summation s = generalized_m_sum(sp, z, args.terms);
        value = to_json(s.value);
        count = s.terms;
        est = s.last_term;
    } else if (t == "struve-n" || t == "phi") {
        const StruveParams sp = struve_params();
        input["order"] = args.order;
        const PowerSeries f = t == "struve-n" ? normalized_n_series(sp, args.order) : phi_series(sp, args.order);
        value = to_json(f.evaluate(z));
        count = f.order() + 1;
        est = std::abs(f[f.order()]) * std::pow(std::abs(z), static_cast<double>(f.order()));
    } else if (t == "f21") {
        const cplx a = complex_flag("a", args.a), b = complex_flag("b", args.b), c = complex_flag("c", args.c);
        input["a"] = to_json(a);
        input["b"] = to_json(b);
        input["c"] = to_json(c);
        input["tol"] = args.tol;
        const F21Value v = f21_detailed(HypergeomParams(a, b, c), z, args.tol);
        input["route"] = v.route == F21Route::Series ? "series" : "pfaff";
        value = to_json(v.value);
        count = v.terms;
        est = v.error_estimate;
    } else if (t == "q" || t == "h-bound") {
        const DominantParams dp(args.beta, MobiusTarget(args.A, args.B));
        input["A"] = args.A;
        input["B"] = args.B;
        input["beta"] = args.beta;
        const QuadratureValue q = best_dominant_q_detailed(dp, z, args.nodes);
        if (t == "q") {
            input["nodes"] = args.nodes;
            value = to_json(q.value);
            count = q.nodes;
            est = q.error_estimate;
        } else {
            const cplx h = sharp_bound_h(dp, z);
            value = to_json(h);
            est = std::abs(h - q.value);  // discrepancy against the quadrature route
        }
    } else {
        throw UsageError("unknown eval target '" + t + "'");
    }

    out << json{{"input", input}, {"value", value}, {"terms_or_nodes", count}, {"est_error", est}}.dump() << '\n';
    return kPass;
}

int cmd_member(const MemberArgs& args, std::ostream& out) {
    const PowerSeries f = read_series_file(args.coeffs);
    const StruveParams sp(complex_flag("p", args.p), complex_flag("b", args.b), complex_flag("c", args.c));
    const ClassParams cp(args.alpha, complex_flag("lambda", args.lambda), args.mu, sp, MobiusTarget(args.A, args.B));
    const SampledFunction samples = sample_j(cp, f, args.radii, args.points);
    const Verdict v = containment_verdict(cp.target, samples);

    if (!args.dump.empty()) {
        std::ofstream csv(args.dump);
        if (!csv) throw UsageError("cannot write dump file " + args.dump);
        csv.precision(17);
        csv << "z_re,z_im,j_re,j_im\n";
        for (const Sample& s : samples) csv << s.z.real() << ',' << s.z.imag() << ',' << s.w.real() << ',' << s.w.imag() << '\n';
    }

    json j = to_json(v);
    j["mode"] = cp.target.is_half_plane() ? "half-plane" : "disk";
    out << j.dump() << '\n';
    return v.passed ? kPass : kCertifiedFail;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(args.suite);
    }
    const SuiteOptions opts{args.seed, args.trials, args.tol};
    std::size_t checks = 0, failures = 0;
    for (const std::string& name : suites) {
        const SuiteReport report = run_suite(name, opts);
        for (const CheckResult& c : report.checks) out << to_json(c).dump() << '\n';
        out << summary_json(report).dump() << '\n';
        checks += report.checks.size();
        failures += report.failures();
    }
    if (suites.size() > 1)
        out << json{{"summary", {{"suite", "all"}, {"checks", checks}, {"failures", failures}, {"passed", failures == 0}}}}
                   .dump()
            << '\n';
    return failures == 0 ? kPass : kCertifiedFail;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
    const MobiusTarget target(args.A, args.B);
    const bool from_class = args.lambda && args.mu && args.k;
    if (!args.beta && !from_class) throw UsageError("bounds needs --beta or all of --lambda --mu --k");
    const DominantParams dp = args.beta ? DominantParams(*args.beta, target)
                                        : DominantParams::from_class(*args.lambda, *args.mu, *args.k, target);
    json params = {{"A", args.A}, {"B", args.B}, {"beta", dp.beta()}};

    const BoundPair re = re_bounds(dp);
    out << to_json(BoundReport{"re_bounds", params, re.lower, re.upper, std::nullopt}).dump() << '\n';

    json mp = params;
    mp["r"] = args.r;
    const BoundPair mod = modulus_bounds(dp, args.r);
    out << to_json(BoundReport{"modulus_bounds", mp, mod.lower, mod.upper, std::nullopt}).dump() << '\n';

    if (dp.beta() > 0.0) {
        out << to_json(BoundReport{"sharp_lower_h_minus1", params, lower_bound_h_minus1(dp),
                                   std::numeric_limits<double>::infinity(), std::nullopt})
                   .dump()
            << '\n';
    }

    const Verdict star = q_starlike_certificate(args.A, args.B, 50, 360);
    out << to_json(BoundReport{"starlike_Q", params, star.margin, std::numeric_limits<double>::infinity(), star.margin})
               .dump()
        << '\n';

    if (from_class) {
        const double rstar = radius_positivity(*args.lambda, *args.mu, *args.k);
        json rp = {{"lambda", *args.lambda}, {"mu", *args.mu}, {"k", *args.k}, {"r", args.r}};
        out << to_json(BoundReport{"radius", rp, 0.0, rstar, radius_factor(*args.lambda, *args.mu, *args.k, args.r)})
                   .dump()
            << '\n';
    }
    return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Struve convolution operator: evaluation, bounds and verification"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a special function, dominant or bound at a point");
    eval->add_option("target", ea.target, "struve-h|struve-l|struve-m|struve-n|f21|phi|q|h-bound")
        ->required()
        ->check(CLI::IsMember({"struve-h", "struve-l", "struve-m", "struve-n", "f21", "phi", "q", "h-bound"}));
    eval->add_option("--p", ea.p, "Struve order p (complex, e.g. 0.3+0.1i)");
    eval->add_option("--b", ea.b, "Struve b, or 2F1 b for target f21");
    eval->add_option("--c", ea.c, "Struve c, or 2F1 c for target f21");
    eval->add_option("--a", ea.a, "2F1 a");
    eval->add_option("--z", ea.z, "evaluation point");
    eval->add_option("--A", ea.A, "Moebius target A");
    eval->add_option("--B", ea.B, "Moebius target B");
    eval->add_option("--beta", ea.beta, "dominant exponent mu k / lambda");
    eval->add_option("--terms", ea.terms, "series terms for struve-h/l/m")->check(CLI::PositiveNumber);
    eval->add_option("--order", ea.order, "truncation order for struve-n and phi")->check(CLI::PositiveNumber);
    eval->add_option("--nodes", ea.nodes, "initial quadrature nodes for q")->check(CLI::Range(2, 2048));
    eval->add_option("--tol", ea.tol, "2F1 series tail tolerance")->check(CLI::PositiveNumber);

    MemberArgs ma;
    auto* member = app.add_subcommand("member", "Sampled class membership test for a coefficient file");
    member->add_option("coeffs", ma.coeffs, "JSON array of [re, im] coefficients")->required();
    member->add_option("--alpha", ma.alpha, "rotation alpha in radians, |alpha| < pi/2");
    member->add_option("--lambda", ma.lambda, "lambda (complex)");
    member->add_option("--mu", ma.mu, "mu in (0, 1)");
    member->add_option("--p", ma.p, "Struve p (complex)");
    member->add_option("--b", ma.b, "Struve b (complex)");
    member->add_option("--c", ma.c, "Struve c (complex)");
    member->add_option("--A", ma.A, "Moebius target A");
    member->add_option("--B", ma.B, "Moebius target B");
    member->add_option("--radii", ma.radii, "ascending sampling radii in (0, 1)");
    member->add_option("--points", ma.points, "points per circle")->check(CLI::PositiveNumber);
    member->add_option("--dump", ma.dump, "write sampled (z, J) pairs as CSV");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run seeded verification suites");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", va.suite)->required()->check(CLI::IsMember(suite_choices));
    verify->add_option("--seed", va.seed);
    verify->add_option("--trials", va.trials)->check(CLI::PositiveNumber);
    verify->add_option("--tol", va.tol)->check(CLI::NonNegativeNumber);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Print bound reports for a Moebius target");
    bounds->add_option("--A", ba.A);
    bounds->add_option("--B", ba.B);
    bounds->add_option("--beta", ba.beta, "mu k / lambda");
    bounds->add_option("--lambda", ba.lambda);
    bounds->add_option("--mu", ba.mu);
    bounds->add_option("--k", ba.k);
    bounds->add_option("--r", ba.r, "radius for the modulus bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*eval) return cmd_eval(ea, out);
        if (*member) return cmd_member(ma, out);
        if (*verify) return cmd_verify(va, out);
        if (*bounds) return cmd_bounds(ba, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidArgument ? kUsage : kNumeric;
    }
    return kUsage;
}

}  // namespace gstruve::cli
