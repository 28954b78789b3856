#include "gstruve/operator.hpp"

#include <cmath>

namespace gstruve {

namespace {

constexpr double kNormalizationTol = 1e-14;

}  // namespace

PowerSeries phi_series(const StruveParams& params, std::size_t order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "phi series needs order >= 1");
    const PowerSeries n_coeffs = normalized_n_series(params, order - 1);
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    for (std::size_t n = 0; n < order; ++n) c[n + 1] = n_coeffs[n];
    return PowerSeries(std::move(c));
}

PowerSeries convolve_with_phi(const StruveParams& params, const PowerSeries& u) {
    if (u.order() < 1) return hadamard(PowerSeries({cplx{0.0, 0.0}}), u);
    return hadamard(phi_series(params, u.order()), u);
}

PowerSeries apply_s(const StruveParams& params, const PowerSeries& f) {
    if (!f.is_normalized(kNormalizationTol))
        throw Error(ErrorKind::InvalidArgument, "S_k^c acts on normalized f (f(0)=0, f'(0)=1)");
    return convolve_with_phi(params, f);
}

PowerSeries apply_s_struve(cplx p, const PowerSeries& f) { return apply_s(StruveParams(p, 1.0, 1.0), f); }

PowerSeries apply_s_modified(cplx p, const PowerSeries& f) { return apply_s(StruveParams(p, 1.0, -1.0), f); }

double recurrence_residual(const StruveParams& params, const PowerSeries& f) {
    const PowerSeries s_k = apply_s(params, f);
    const PowerSeries s_k1 = apply_s(params.shifted(), f);
    const PowerSeries z_ds = multiply_by_z(differentiate(s_k1));
    const cplx k = params.k();
    const PowerSeries rhs = linear_combine(k, s_k, -(k - 1.0), s_k1);
    return max_coefficient_difference(z_ds, rhs);
}

}  // namespace gstruve
