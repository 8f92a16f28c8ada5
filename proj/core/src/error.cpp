#include "npoly/error.hpp"

namespace npoly {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidProfile: return "invalid profile";
    case ErrorKind::InvalidWindow: return "invalid window";
    case ErrorKind::InvalidInstance: return "invalid instance";
    case ErrorKind::InvalidChain: return "invalid chain";
    case ErrorKind::IndexOutOfDomain: return "index out of domain";
    case ErrorKind::DegenerateVertex: return "degenerate vertex";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::CapViolation: return "cap violation";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Internal: return "internal error";
    }
    return "unknown error";
}

} // namespace npoly
