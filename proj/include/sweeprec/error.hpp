#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sweeprec {

enum class ErrorKind {
    InvalidInput,
    NotFound,
    NoPerpendicular,     // a simplex spans the ambient space
    NotPerpendicular,    // a query direction is not orthogonal to its simplex
    VerificationFailed,  // no candidate-ordering circle found within the retry budget
    InternalInvariantViolation,
    ReconstructionMismatch,
    Unsupported,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sweeprec
