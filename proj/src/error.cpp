#include "sweeprec/error.hpp"

namespace sweeprec {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::NoPerpendicular: return "NoPerpendicular";
        case ErrorKind::NotPerpendicular: return "NotPerpendicular";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
        case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace sweeprec
