#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rclean/mat2.hpp"
#include "rclean/quadratic.hpp"

namespace rclean {

enum class MatrixCase { Invertible, Radical, SplitSpectral, NotRadClean };

/// Which decision route produced a verdict.
enum class Method {
    CharRoots,              // chi(A) splits with one radical and one unit root
    NormalizedQuadratic,    // x^2 + x = -det/tr^2 has a radical root
    DiscriminantQuadratic,  // det radical and x^2 + x = det/(tr^2 - 4 det) solvable
    SquareDiscriminant,     // det radical and tr^2 - 4 det is a square (2 a unit)
};

std::string to_string(MatrixCase kind);
std::string to_string(Method method);

/// A = E + U with E idempotent, U invertible, EA = AE and EAE radical.
/// `verified` lists the checked conditions; a Witness is never handed out
/// unless all five hold.
struct Witness {
    Mat2 idempotent;
    Mat2 unit;
    std::vector<std::string> verified;
};

struct Classification {
    MatrixCase kind = MatrixCase::NotRadClean;
    std::optional<RootPair> roots;
    bool strongly_rad_clean = false;
    bool strongly_clean = false;
    std::optional<Witness> witness;
    Method method = Method::CharRoots;
    /// Why a NotRadClean verdict was reached; empty otherwise.
    std::string reason;
};

inline constexpr const char* kReasonTraceNotUnit = "trace not a unit";
inline constexpr const char* kReasonNoSplit = "characteristic polynomial has no radical root";

Classification classify_rad_clean(const Mat2& a);

/// I - A invertible, or A strongly rad-clean.
bool classify_strongly_clean(const Mat2& a);

enum class CriterionPath { NormalizedQuadratic, DiscriminantQuadratic, SquareDiscriminant };

/// Decides strong rad-cleanness by one specific quadratic criterion, for
/// cross-checking classify_rad_clean. SquareDiscriminant throws CharTwo when
/// 2 is not a unit.
bool rad_clean_alternative(const Mat2& a, CriterionPath path);

/// Checks the five witness conditions; throws WitnessVerificationFailed
/// naming the first one that fails.
std::vector<std::string> verify_witness(const Mat2& a, const Mat2& e, const Mat2& u);

/// Spectral projector E = (beta - alpha)^-1 (beta I - A) onto ker(A - alpha I)
/// along ker(A - beta I), and U = A - E. Rejects root pairs that do not
/// factor chi(A) across J and U.
Witness construct_witness(const Mat2& a, const RootPair& roots);
/// E = 0, U = A.
Witness invertible_witness(const Mat2& a);
/// E = I, U = A - I.
Witness radical_witness(const Mat2& a);

enum class NormalCase { I, II, III, IV };

std::string to_string(NormalCase kind);

/// For cases I-III `normal_form` = P A P^-1 = [[0, -det A], [1, tr A]].
/// For case IV `normal_form` = P A is upper triangular with unit diagonal,
/// certifying A in GL_2.
struct Normalization {
    Mat2 transform;
    Mat2 normal_form;
    NormalCase kind;
};

/// PreconditionViolated when tr A is not a unit.
Normalization normalize_invertible_trace(const Mat2& a);

struct TraceVerdict {
    SolvabilityVerdict solvability;
    /// [[0, -lambda], [1, -mu]], whose characteristic polynomial is the
    /// unsolvable t^2 + mu t + lambda; set only for counterexamples.
    std::optional<Mat2> counterexample_matrix;
};

/// Whether every matrix with invertible trace over `ring` is strongly rad-clean.
TraceVerdict trace_property_check(const RingPtr& ring, std::size_t budget);

}  // namespace rclean
