#pragma once

#include <stdexcept>
#include <string>

namespace localext {

enum class ErrorKind {
    InvalidArgument,
    Domain,
    NoInverse,
    NoLift,
    PreconditionViolation,
    RejectedInput,
    InternalInconsistency,
    Inconclusive,
    Unsupported,
    NotApplicable,
    Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace localext
