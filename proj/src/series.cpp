#include "gstruve/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gstruve {

namespace {

cplx coeff_or_zero(const PowerSeries& f, std::size_t n) { return n <= f.order() ? f[n] : cplx{}; }

}  // namespace

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "power series needs at least one coefficient");
}

PowerSeries PowerSeries::identity(std::size_t order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "identity series needs order >= 1");
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    c[1] = 1.0;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(std::size_t order, std::size_t start) {
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    for (std::size_t n = start; n <= order; ++n) c[n] = 1.0;
    return PowerSeries(std::move(c));
}

bool PowerSeries::is_normalized(double tol) const noexcept {
    if (coeffs_.size() < 2) return false;
    return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

cplx PowerSeries::evaluate(cplx z) const noexcept {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::min(f.order(), g.order()) + 1;
    std::vector<cplx> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f[i] * g[i];
    return PowerSeries(std::move(c));
}

PowerSeries differentiate(const PowerSeries& f) {
    if (f.order() == 0) throw Error(ErrorKind::InvalidArgument, "cannot differentiate an order-0 series");
    std::vector<cplx> c(f.order());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = static_cast<double>(n + 1) * f[n + 1];
    return PowerSeries(std::move(c));
}

PowerSeries multiply_by_z(const PowerSeries& f) {
    std::vector<cplx> c(f.order() + 2, cplx{0.0, 0.0});
    for (std::size_t n = 1; n < c.size(); ++n) c[n] = f[n - 1];
    return PowerSeries(std::move(c));
}

PowerSeries linear_combine(cplx a, const PowerSeries& f, cplx b, const PowerSeries& g) {
    // the shorter series counts as zero-padded
    const std::size_t n = std::max(f.order(), g.order()) + 1;
    std::vector<cplx> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a * coeff_or_zero(f, i) + b * coeff_or_zero(g, i);
    return PowerSeries(std::move(c));
}

double max_coefficient_difference(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::max(f.order(), g.order()) + 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(coeff_or_zero(f, i) - coeff_or_zero(g, i)));
    return worst;
}

}  // namespace gstruve
