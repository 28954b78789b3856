#pragma once

// The class functional
//   e^{i alpha} { (1+lambda) (z/S_{k+1}f)^mu - lambda (S_k f / S_{k+1} f) (z/S_{k+1}f)^mu },
// its normalized form J, Moebius target geometry, and sampled subordination
// checks. Subordination to a convex univalent Moebius map is tested as
// containment of sampled values in the image region.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gstruve/series.hpp"
#include "gstruve/specialfn.hpp"

namespace gstruve {

/// Absolute tolerance on containment margins; touching the boundary passes.
inline constexpr double kContainmentTol = 1e-9;

/// phi(z) = (1 + A z)/(1 + B z) with -1 <= B < A <= 1. For B > -1 the image
/// of the unit disk is the open disk with center (1-AB)/(1-B^2) and radius
/// (A-B)/(1-B^2); for B = -1 it is the half-plane Re w > (1-A)/2.
class MobiusTarget {
public:
    MobiusTarget(double A, double B);

    double A() const noexcept { return A_; }
    double B() const noexcept { return B_; }
    bool is_half_plane() const noexcept { return B_ == -1.0; }
    double center() const noexcept;
    double radius() const noexcept;
    double half_plane_bound() const noexcept { return (1.0 - A_) / 2.0; }

    cplx operator()(cplx z) const noexcept { return (1.0 + A_ * z) / (1.0 + B_ * z); }

private:
    double A_, B_;
};

struct ClassParams {
    ClassParams(double alpha_, cplx lambda_, double mu_, StruveParams struve_, MobiusTarget target_);

    double alpha;  ///< radians, |alpha| < pi/2
    cplx lambda;
    double mu;     ///< 0 < mu < 1
    StruveParams struve;
    MobiusTarget target;
};

struct Verdict {
    bool passed = true;
    std::optional<cplx> witness;  ///< worst sample, reported on failure
    double margin = 0.0;          ///< worst signed distance to the boundary
    std::size_t samples_used = 0;
};

/// A function known only through samples w = f(z).
struct Sample {
    cplx z;
    cplx w;
};
using SampledFunction = std::vector<Sample>;

/// exp(mu Log w). Rejects w = 0.
cplx power_mu(cplx w, double mu);

/// Holds S_k f and S_{k+1} f so that repeated pointwise evaluation does not
/// rebuild the series.
class ClassEvaluator {
public:
    ClassEvaluator(ClassParams params, const PowerSeries& f);

    const ClassParams& params() const noexcept { return params_; }
    const PowerSeries& s_k() const noexcept { return s_k_; }
    const PowerSeries& s_k1() const noexcept { return s_k1_; }

    /// (z / S_{k+1}f(z))^mu; 1 at z = 0.
    cplx power_term(cplx z) const;
    /// (S_k f / S_{k+1} f)(z/S_{k+1} f)^mu; 1 at z = 0.
    cplx ratio_term(cplx z) const;
    cplx class_expression(cplx z) const;
    cplx j_functional(cplx z) const;
    /// (1/cos alpha)(e^{i alpha} power_term - i sin alpha).
    cplx p_functional(cplx z) const;

private:
    void check_point(cplx z) const;
    cplx s_k1_at(cplx z) const;

    ClassParams params_;
    PowerSeries s_k_;
    PowerSeries s_k1_;
};

cplx class_expression(const ClassParams& cp, const PowerSeries& f, cplx z);
cplx j_functional(const ClassParams& cp, const PowerSeries& f, cplx z);

/// radius - |w - center| for disks, Re w - (1-A)/2 for the half-plane.
double mobius_image_check(const MobiusTarget& target, cplx w) noexcept;

/// Worst-margin verdict of the given samples against the target region.
Verdict containment_verdict(const MobiusTarget& target, std::span<const Sample> samples, double tol = kContainmentTol);

std::vector<double> default_radii();
inline constexpr std::size_t kDefaultPointsPerCircle = 720;

/// J sampled on the circles |z| = r. radii must be ascending in (0, 1).
SampledFunction sample_j(const ClassParams& cp, const PowerSeries& f, std::span<const double> radii,
                         std::size_t points_per_circle);

Verdict membership_test(const ClassParams& cp, const PowerSeries& f, std::span<const double> radii,
                        std::size_t points_per_circle = kDefaultPointsPerCircle);

/// Image of (1+A2 z)/(1+B2 z) inside that of (1+A1 z)/(1+B1 z) for
/// -1 <= B1 <= B2 < A2 <= A1 <= 1 (inner = (A2,B2), outer = (A1,B1)).
Verdict lemma6_check(const MobiusTarget& inner, const MobiusTarget& outer);

/// sigma f + (1-sigma) g stays inside F when f and g do. f and g must be
/// sampled at the same points and must both pass containment.
Verdict lemma3_check(const MobiusTarget& F, std::span<const Sample> f_vals, std::span<const Sample> g_vals,
                     double sigma);

}  // namespace gstruve
