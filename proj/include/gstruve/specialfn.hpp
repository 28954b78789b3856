#pragma once

// Gamma, Pochhammer and the Struve family: H_p, L_p, the generalized
// M_{p,b,c} and its normalized form N_{p,b,c}(z) = sum (-c/4)^n z^n / ((3/2)_n (k)_n).
//
// Every fractional power uses the principal branch z^w = exp(w Log z).

#include <cstddef>

#include "gstruve/error.hpp"
#include "gstruve/series.hpp"

namespace gstruve {

/// (p, b, c) with derived k = p + (b+2)/2. Construction rejects k in {0, -1, -2, ...}.
class StruveParams {
public:
    StruveParams(cplx p, cplx b, cplx c);

    cplx p() const noexcept { return p_; }
    cplx b() const noexcept { return b_; }
    cplx c() const noexcept { return c_; }
    cplx k() const noexcept { return k_; }

    /// Parameters of S_{k+1}: p -> p+1 with b and c held fixed.
    StruveParams shifted() const { return StruveParams(p_ + 1.0, b_, c_); }

private:
    cplx p_, b_, c_, k_;
};

/// True when z lies within `tol` of one of 0, -1, -2, ...
bool is_nonpositive_integer(cplx z, double tol = 1e-12) noexcept;

/// exp(w Log z) with the principal logarithm; 0^w = 0 for Re w > 0, 0^0 = 1.
cplx principal_pow(cplx z, cplx w);

/// Lanczos approximation with reflection for Re z < 1/2. Throws Pole at 0, -1, -2, ...
cplx gamma(cplx z);

/// Rising factorial g (g+1) ... (g+n-1) by direct product.
cplx pochhammer(cplx g, std::size_t n) noexcept;

struct Summation {
    cplx value;
    std::size_t terms;
    double last_term;  ///< modulus of the final term added
};

/// Partial sums of the Struve-type series over `terms` terms (terms >= 1).
Summation struve_h_sum(cplx p, cplx z, std::size_t terms);
Summation struve_l_sum(cplx p, cplx z, std::size_t terms);
Summation generalized_m_sum(const StruveParams& params, cplx z, std::size_t terms);

inline cplx struve_h(cplx p, cplx z, std::size_t terms) { return struve_h_sum(p, z, terms).value; }
inline cplx struve_l(cplx p, cplx z, std::size_t terms) { return struve_l_sum(p, z, terms).value; }
inline cplx generalized_m(const StruveParams& params, cplx z, std::size_t terms) {
    return generalized_m_sum(params, z, terms).value;
}

/// Coefficients of N_{p,b,c} up to z^order; constant term 1.
PowerSeries normalized_n_series(const StruveParams& params, std::size_t order = kDefaultOrder);

/// Largest coefficientwise residual of
///   4 z^2 w'' + 2(2p+b+3) z w' + (cz + 2p+b) w = 2p+b
/// for w = N_{p,b,c}, over powers 0..order-1. Requires order >= 2.
double ode_residual_n(const StruveParams& params, std::size_t order);

}  // namespace gstruve
