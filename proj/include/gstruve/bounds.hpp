#pragma once

// Dominants and bounds for members of the class with a Moebius target
// phi = (1+Az)/(1+Bz), all driven by the exponent beta = mu k / lambda:
//
//   q(z)   = beta int_0^1 phi(zu) u^{beta-1} du                  (best dominant)
//   h(z)   = A/B + (1-A/B)(1+Bz)^{-1} 2F1(1,1;beta+1; Bz/(1+Bz))  (closed form of q)
//   h(-1)  = beta int_0^1 (1-At)/(1-Bt) t^{beta-1} dt            (sharp Re lower bound)
//
// plus the radius of positivity, the starlikeness certificate for
// Q(z) = (A-B) z/(1+Bz)^2 and the algebraic identities behind the
// inclusion results.

#include <cstddef>
#include <cstdint>
#include <limits>

#include "gstruve/classes.hpp"

namespace gstruve {

class DominantParams {
public:
    /// beta must be finite and >= 0.
    DominantParams(double beta, MobiusTarget target);
    /// beta = mu k / lambda; rejects lambda = 0.
    static DominantParams from_class(double lambda, double mu, double k, MobiusTarget target);

    double beta() const noexcept { return beta_; }
    const MobiusTarget& target() const noexcept { return target_; }

private:
    double beta_;
    MobiusTarget target_;
};

struct QuadratureValue {
    cplx value;
    std::size_t nodes;
    double error_estimate;  ///< |Q_n - Q_{n/2}| at the accepted node count
};

inline constexpr std::size_t kDominantNodes = 128;
inline constexpr std::size_t kDominantMaxNodes = 2048;

/// Best dominant by Gauss-Jacobi quadrature with weight u^{beta-1}; the node
/// count doubles from `nodes` until successive values agree to 1e-13.
/// Requires beta > 0 and |z| < 1.
QuadratureValue best_dominant_q_detailed(const DominantParams& dp, cplx z, std::size_t nodes = kDominantNodes);
inline cplx best_dominant_q(const DominantParams& dp, cplx z, std::size_t nodes = kDominantNodes) {
    return best_dominant_q_detailed(dp, z, nodes).value;
}

/// Closed form of q through 2F1; B = 0 uses 1 + beta/(beta+1) A z.
cplx sharp_bound_h(const DominantParams& dp, cplx z);

/// h(-1); finite for every admissible (A, B). Requires beta > 0.
double lower_bound_h_minus1(const DominantParams& dp);

struct BoundPair {
    double lower;
    double upper;
};

/// Bounds on (1/cos alpha) Re{e^{i alpha}(z/S_{k+1}f)^mu}. For B = -1 the
/// upper bound is +infinity (the half-plane target is unbounded).
BoundPair re_bounds(const DominantParams& dp);

/// Bounds on |p(z)| for |z| <= r, 0 <= r < 1.
BoundPair modulus_bounds(const DominantParams& dp, double r);

/// r* = -c + sqrt(c^2 + 1), c = |lambda / (mu k)|.
double radius_positivity(double lambda, double mu, double k);
/// (1 - r^2 - 2cr)/(1 - r^2); positive exactly for r < r*.
double radius_factor(double lambda, double mu, double k, double r);

/// Re(z Q'/Q) for Q = const (A-B) z/(1+Bz)^2 at z = r e^{i psi}.
double starlike_closed_form(double B, double r, double psi) noexcept;
/// Q(z) = scale (A-B) z / (1+Bz)^2.
cplx q_function(double A, double B, cplx z, double scale = 1.0) noexcept;

inline constexpr std::size_t kStarlikeCrossPoints = 20;
inline constexpr double kStarlikeCrossTol = 1e-10;

/// Closed form of Re(zQ'/Q) on the grid r_i = (i+1)/(grid_r+1), psi_j = 2 pi j/grid_psi,
/// cross-checked against a contour-integral derivative of Q at seeded points.
Verdict q_starlike_certificate(double A, double B, std::size_t grid_r, std::size_t grid_psi, std::uint64_t seed = 0);

/// Perturbation coefficient of the Briot-Bouquet target
/// h = (1+Az)/(1+Bz) + coef (A-B)z/(1+Bz)^2.
enum class CoefficientVariant {
    Proof,      ///< lambda / (mu k): what the differential subordination produces
    Statement,  ///< lambda mu / k: the alternative form, kept for comparison
};
double briot_bouquet_coefficient(double lambda, double mu, double k, CoefficientVariant variant);
cplx briot_bouquet_target(double A, double B, double coefficient, cplx z) noexcept;
/// |g + (lambda/(mu k)) z g' - h_variant| with g = (1+Az)/(1+Bz); zero for the proof variant.
double briot_bouquet_residual(double lambda, double mu, double k, double A, double B, cplx z,
                              CoefficientVariant variant);

/// (lambda1/lambda2) h1 + (1 - lambda1/lambda2) h2 for 0 <= lambda1 < lambda2.
cplx inclusion_interpolant(double lambda1, double lambda2, cplx h1, cplx h2);

/// (1 + 1/lambda) e1 - (1/lambda) e2; recovers the ratio term from the power
/// term e1 and the class expression e2. Rejects lambda = 0.
cplx lambda_negative_identity(cplx lambda, cplx e1, cplx e2);

}  // namespace gstruve
