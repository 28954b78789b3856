#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
//
// Series are immutable values. Binary operations on series of different
// truncation orders produce a result at the shorter order; nothing is
// zero-extended.

#include <cstddef>
#include <span>
#include <vector>

#include "gstruve/error.hpp"

namespace gstruve {

inline constexpr std::size_t kDefaultOrder = 64;

class PowerSeries {
public:
    /// Throws InvalidArgument on an empty coefficient vector.
    explicit PowerSeries(std::vector<cplx> coeffs);

    /// f(z) = z truncated at `order` (order >= 1).
    static PowerSeries identity(std::size_t order = kDefaultOrder);
    /// Geometric series sum_{n=start}^{order} z^n.
    static PowerSeries geometric(std::size_t order, std::size_t start = 0);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    const cplx& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// c_0 == 0 and c_1 == 1 within `tol`. Order-0 series are never normalized.
    bool is_normalized(double tol = 0.0) const noexcept;

    cplx evaluate(cplx z) const noexcept;

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<cplx> coeffs_;
};

/// Termwise product; result has the smaller of the two orders.
PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g);

/// f'(z); the order drops by one. Rejects order-0 input.
PowerSeries differentiate(const PowerSeries& f);

/// z * f(z); exact, so the order grows by one.
PowerSeries multiply_by_z(const PowerSeries& f);

/// a*f + b*g coefficientwise; the shorter series is zero-padded.
PowerSeries linear_combine(cplx a, const PowerSeries& f, cplx b, const PowerSeries& g);

/// Horner evaluation; |z| < 1 is expected but not enforced.
inline cplx evaluate(const PowerSeries& f, cplx z) noexcept { return f.evaluate(z); }

/// Largest coefficient modulus of f - g, the shorter series zero-padded.
double max_coefficient_difference(const PowerSeries& f, const PowerSeries& g);

}  // namespace gstruve
