#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rclean/mat2.hpp"

namespace rclean {

/// The two roots of a quadratic that splits across the local dichotomy:
/// alpha in J(R), beta in U(R).
struct RootPair {
    Elem alpha;
    Elem beta;

    friend bool operator==(const RootPair&, const RootPair&) = default;
};

/// Roots of t^2 + mu t + lam with mu a unit and lam radical.
///
/// Residue rings (Zmod, Padic): mod p the polynomial is t(t + mu), whose root
/// 0 is simple, so Newton iteration from 0 converges to the unique radical
/// root. Zloc: the discriminant must be a rational square. Series: the base
/// ring is solved first and the root is lifted coefficient by coefficient.
///
/// Throws PreconditionViolated if mu is not a unit or lam is not radical,
/// NotSolvable if the quadratic has no root in the ring.
RootPair solve_split_quadratic(const MonicQuadratic& q);

/// Radical root of x^2 + x = c for radical c. NotSolvable when none exists.
Elem solve_x2_plus_x(const Elem& c);

/// Some u with u^2 = d. Requires 2 to be a unit (CharTwo otherwise); throws
/// NotASquare when d has no square root. Deterministic: over residue rings
/// the root whose residue mod p is smaller is lifted.
Elem discriminant_sqrt(const Elem& d);

/// Every root of q, by scanning the whole ring. Zmod only, modulus <= 2^20.
std::vector<Elem> roots_by_enumeration(const MonicQuadratic& q);

enum class SolvabilityStatus { Holds, HoldsOnSample, Counterexample };

std::string to_string(SolvabilityStatus status);

/// Result of checking "x^2 + mu x + lam = 0 is solvable for every lam in J,
/// mu in U". `lambda`/`mu` are set only for Counterexample.
struct SolvabilityVerdict {
    SolvabilityStatus status;
    std::size_t checked = 0;
    std::string justification;
    std::optional<Elem> lambda;
    std::optional<Elem> mu;
};

/// Zmod: exhaustive over J x U (BudgetExceeded if |J||U| > budget).
/// Padic: holds for every prime and precision, no search needed.
/// Zloc: small-height pairs in a fixed order, at most `budget` of them.
/// Series: `budget` pseudo-random pairs from a fixed seed.
SolvabilityVerdict solvable_for_all(const RingPtr& ring, std::size_t budget);

}  // namespace rclean
