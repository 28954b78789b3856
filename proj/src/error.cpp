#include "gstruve/error.hpp"

#include <sstream>

namespace gstruve {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::NonConvergence: return "non_convergence";
        case ErrorKind::Singular: return "singular";
    }
    return "unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& what, const std::optional<cplx>& where) {
    std::ostringstream os;
    os << to_string(kind) << ": " << what;
    if (where) os << " at z=(" << where->real() << "," << where->imag() << ")";
    return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::optional<cplx> where)
    : std::runtime_error(format_message(kind, what, where)), kind_(kind), where_(where) {}

}  // namespace gstruve
