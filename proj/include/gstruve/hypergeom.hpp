#pragma once

// Gauss hypergeometric 2F1(a, b; c; z) through three representations that
// check each other: the defining series, the Euler integral and the Pfaff
// transformation.

#include <cstddef>

#include "gstruve/error.hpp"

namespace gstruve {

/// The hypergeometric a, b, c. Rejects c in {0, -1, -2, ...}.
struct HypergeomParams {
    HypergeomParams(cplx a_, cplx b_, cplx c_);

    cplx a, b, c;
};

inline constexpr double kF21Tolerance = 1e-15;
inline constexpr std::size_t kF21MaxTerms = 100000;
inline constexpr std::size_t kEulerNodes = 128;

enum class F21Route { Series, Pfaff };

struct F21Value {
    cplx value;
    std::size_t terms;
    double error_estimate;  ///< final tail estimate of the summed series
    F21Route route;
};

/// Series summed until |next term| / (1 - |z|) < tol. Requires |z| < 1.
F21Value f21_series_detailed(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance);
inline cplx f21_series(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance) {
    return f21_series_detailed(hp, z, tol).value;
}

/// Euler integral by Gauss-Jacobi quadrature. Requires Re c > Re b > 0 and z not in [1, inf).
cplx f21_euler(const HypergeomParams& hp, cplx z, std::size_t nodes = kEulerNodes);

/// (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); requires |z/(z-1)| < 1, i.e. Re z < 1/2.
F21Value f21_pfaff_detailed(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance);
inline cplx f21_pfaff(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance) {
    return f21_pfaff_detailed(hp, z, tol).value;
}

/// |2F1(a,b;c;z) - 2F1(b,a;c;z)| from two independent series summations.
double f21_symmetry_check(const HypergeomParams& hp, cplx z);

/// Production entry point: series near the origin, Pfaff where it shrinks the
/// argument, plain series for the rest of the disk.
F21Value f21_detailed(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance);
inline cplx f21(const HypergeomParams& hp, cplx z, double tol = kF21Tolerance) { return f21_detailed(hp, z, tol).value; }

}  // namespace gstruve
