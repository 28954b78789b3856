#pragma once

// The convolution operator S_k^c f = phi_{p,b,c} * f, where
//   phi_{p,b,c}(z) = z + sum_{n>=1} (-c/4)^n z^{n+1} / ((3/2)_n (k)_n),
// and the recurrence certificate linking S_k and S_{k+1}.

#include "gstruve/series.hpp"
#include "gstruve/specialfn.hpp"

namespace gstruve {

PowerSeries phi_series(const StruveParams& params, std::size_t order = kDefaultOrder);

/// hadamard(phi, u) without the normalization check; linear in u.
PowerSeries convolve_with_phi(const StruveParams& params, const PowerSeries& u);

/// S_k^c f. Throws InvalidArgument unless f(0) = 0 and f'(0) = 1.
PowerSeries apply_s(const StruveParams& params, const PowerSeries& f);

/// b = 1, c = 1: the operator attached to H_p (k = p + 3/2).
PowerSeries apply_s_struve(cplx p, const PowerSeries& f);
/// b = 1, c = -1: the operator attached to L_p.
PowerSeries apply_s_modified(cplx p, const PowerSeries& f);

/// max_n |[z (S_{k+1} f)' - k S_k f + (k-1) S_{k+1} f]_n|, with S_{k+1}
/// built from p+1.
double recurrence_residual(const StruveParams& params, const PowerSeries& f);

}  // namespace gstruve
