#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cohomone {

enum class ErrorKind {
    Parse,
    Validation,
    WrongOrbitSpace,
    NotComputed,
    Hypothesis,
    Inconsistent,
    FamilyNotImplemented,
    DivisionByZero,
    VariableMismatch,
    Inhomogeneous,
    InfiniteQuotient,
    Unsupported,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::WrongOrbitSpace: return "wrong orbit space";
    case ErrorKind::NotComputed: return "not computed by this formula";
    case ErrorKind::Hypothesis: return "hypothesis not met";
    case ErrorKind::Inconsistent: return "inconsistent input";
    case ErrorKind::FamilyNotImplemented: return "family not implemented";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::VariableMismatch: return "variable mismatch";
    case ErrorKind::Inhomogeneous: return "inhomogeneous polynomial";
    case ErrorKind::InfiniteQuotient: return "infinite-dimensional quotient";
    case ErrorKind::Unsupported: return "unsupported";
    }
    return "error";
}

/// Single exception type for the library; `kind()` carries the taxonomy.
/// Parse errors additionally carry a character offset into the input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position = {})
        : std::runtime_error(message), kind_(kind), position_(position)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

} // namespace cohomone
