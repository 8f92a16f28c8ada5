#pragma once

#include <stdexcept>
#include <string>

namespace npoly {

enum class ErrorKind {
    InvalidProfile,
    InvalidWindow,
    InvalidInstance,
    InvalidChain,
    IndexOutOfDomain,
    DegenerateVertex,
    CapExceeded,
    CapViolation,
    Parse,
    InvalidArgument,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) which exit path to take.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace npoly
