#pragma once

#include "rclean/classify.hpp"
#include "rclean/mat2.hpp"

namespace rclean {

/// Entrywise constant coefficient: M_2(R[[x]]/(x^m)) -> M_2(R).
Mat2 evaluate_at_zero(const Mat2& a);

struct SeriesMembership {
    bool gl2;
    bool radical;
};

/// GL_2 and J(M_2) membership of a series matrix, both decided at x = 0.
SeriesMembership series_membership(const Mat2& a);

/// Image of a series element in the same base ring truncated at a lower order.
Elem truncate_series(const Elem& s, unsigned order);
Mat2 truncate_series(const Mat2& a, unsigned order);

/// Lifts a simple root b0 of t^2 + mu_0 t + lam_0 (base ring) to a root y of
/// t^2 + mu(x) t + lam(x) in the series ring, solving for the x^k coefficient
///
///   (2 b0 + mu_0) b_k = -lam_k - sum_{i=1..k} mu_i b_{k-i} - sum_{i=1..k-1} b_i b_{k-i}.
///
/// NotSimpleRoot if 2 b0 + mu_0 is not a unit; PreconditionViolated if b0 is
/// not a root of the constant-term quadratic.
Elem lift_simple_root(const Elem& mu, const Elem& lam, const Elem& b0);

/// lift_simple_root restricted to a radical seed, so the lifted root lies in
/// J(R[[x]]).
Elem lift_root_recurrence(const Elem& mu, const Elem& lam, const Elem& b0);

/// Classifies A(x) through A(0): the invertible and radical cases transfer
/// directly, and in the split case the base radical root is lifted and the
/// witness is built over the series ring.
Classification classify_series_matrix(const Mat2& a);

}  // namespace rclean
