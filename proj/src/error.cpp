#include "rclean/error.hpp"

namespace rclean {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DenominatorNotUnit: return "DenominatorNotUnit";
        case ErrorKind::InvalidRingSpec: return "InvalidRingSpec";
        case ErrorKind::NotSolvable: return "NotSolvable";
        case ErrorKind::NotASquare: return "NotASquare";
        case ErrorKind::CharTwo: return "CharTwo";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotSimpleRoot: return "NotSimpleRoot";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace rclean
