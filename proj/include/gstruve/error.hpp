#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gstruve {

using cplx = std::complex<double>;

/// Classification of library failures. The CLI maps InvalidArgument to exit
/// code 2 and everything else to exit code 3.
enum class ErrorKind {
    InvalidArgument,  ///< precondition on a parameter violated
    Domain,           ///< argument outside the supported region
    Pole,             ///< gamma pole / nonpositive-integer parameter
    NonConvergence,   ///< series or quadrature did not reach tolerance
    Singular,         ///< a denominator vanished at an evaluation point
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<cplx> where = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    /// Evaluation point that triggered the failure, when there is one.
    const std::optional<cplx>& where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::optional<cplx> where_;
};

}  // namespace gstruve
