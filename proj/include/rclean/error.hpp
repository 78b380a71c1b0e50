#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rclean {

enum class ErrorKind {
    RingMismatch,
    PrecisionMismatch,
    NotAUnit,
    NotInvertible,
    ParseError,
    DenominatorNotUnit,
    InvalidRingSpec,
    NotSolvable,
    NotASquare,
    CharTwo,
    PreconditionViolated,
    NotSimpleRoot,
    BudgetExceeded,
    WitnessVerificationFailed,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this one exception type;
// callers that care about the category switch on kind().
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace rclean
