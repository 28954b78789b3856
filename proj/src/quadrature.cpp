#include "gstruve/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "gstruve/error.hpp"

namespace gstruve {

namespace {

// Three-term recurrence for monic Jacobi polynomials on [-1,1] with weight
// (1-x)^a (1+x)^b:  p_{k+1} = (x - diag_k) p_k - off_k^2 p_{k-1}.
struct JacobiRecurrence {
    std::vector<double> diag;
    std::vector<double> off;  // off[k] pairs p_{k+1} with p_k, k = 0..n-2
};

JacobiRecurrence jacobi_recurrence(std::size_t n, double a, double b) {
    JacobiRecurrence r;
    r.diag.resize(n);
    r.off.resize(n > 0 ? n - 1 : 0);
    const double ab = a + b;
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + ab;
        if (k == 0) {
            r.diag[k] = (b - a) / (ab + 2.0);
        } else {
            r.diag[k] = (b * b - a * a) / (s * (s + 2.0));
        }
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + ab;
        double beta_k;
        if (k == 1) {
            beta_k = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            beta_k = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        r.off[k - 1] = std::sqrt(beta_k);
    }
    return r;
}

// Orthonormal-polynomial values at x; returns sum of squares of p_0..p_{n-1}
// and writes p_n (unnormalized last step) and its derivative for Newton.
struct PolyEval {
    double sum_sq;
    double pn;
    double dpn;
};

PolyEval evaluate_orthonormal(const JacobiRecurrence& r, double mu0, double x) {
    const std::size_t n = r.diag.size();
    double p_prev = 0.0, dp_prev = 0.0;
    double p = 1.0 / std::sqrt(mu0), dp = 0.0;
    double sum_sq = p * p;
    for (std::size_t k = 0; k < n; ++k) {
        const double b_next = (k + 1 < n) ? r.off[k] : 1.0;
        const double b_prev = (k > 0) ? r.off[k - 1] : 0.0;
        const double p_next = ((x - r.diag[k]) * p - b_prev * p_prev) / b_next;
        const double dp_next = (p + (x - r.diag[k]) * dp - b_prev * dp_prev) / b_next;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
        if (k + 1 < n) sum_sq += p * p;
    }
    return {sum_sq, p, dp};
}

QuadratureRule build_rule(std::size_t n, double alpha, double beta) {
    // On [-1,1]: t = (1+x)/2, so t^alpha (1-t)^beta  <->  (1+x)^alpha (1-x)^beta.
    const double a = beta;
    const double b = alpha;
    const JacobiRecurrence rec = jacobi_recurrence(n, a, b);
    const double log_mu0 = (a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                           std::lgamma(a + b + 2.0);
    const double mu0 = std::exp(log_mu0);

    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(rec.diag.data(), static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
    for (std::size_t i = 0; i + 1 < n; ++i) sub[static_cast<Eigen::Index>(i)] = rec.off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "Gauss-Jacobi eigenvalue solve failed");

    QuadratureRule rule{alpha, beta, std::vector<double>(n), std::vector<double>(n)};
    const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
    for (std::size_t i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
        for (int it = 0; it < 3; ++it) {
            const PolyEval e = evaluate_orthonormal(rec, mu0, x);
            if (e.dpn == 0.0) break;
            const double dx = e.pn / e.dpn;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const PolyEval e = evaluate_orthonormal(rec, mu0, x);
        rule.nodes[i] = 0.5 * (1.0 + x);
        rule.weights[i] = scale / e.sum_sq;
    }
    return rule;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_jacobi_unit(std::size_t n, double alpha, double beta) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw Error(ErrorKind::InvalidArgument, "Gauss-Jacobi exponents must exceed -1");

    using Key = std::tuple<std::size_t, double, double>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;

    const Key key{n, alpha, beta};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(build_rule(n, alpha, beta));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace gstruve
