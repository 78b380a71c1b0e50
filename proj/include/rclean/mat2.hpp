#pragma once

#include <string>
#include <string_view>

#include "rclean/ring.hpp"

namespace rclean {

/// Row-major [[a, b], [c, d]] over a single ring.
struct Mat2 {
    Elem a, b, c, d;

    Mat2(Elem a, Elem b, Elem c, Elem d);

    static Mat2 zero(const RingPtr& ring);
    static Mat2 identity(const RingPtr& ring);
    static Mat2 from_ints(const RingPtr& ring, long a, long b, long c, long d);

    const RingPtr& ring() const noexcept { return a.ring(); }

    friend bool operator==(const Mat2& lhs, const Mat2& rhs) = default;
};

/// t^2 + mu t + lam. The characteristic polynomial of A has mu = -tr A, lam = det A.
struct MonicQuadratic {
    Elem mu;
    Elem lam;

    Elem evaluate(const Elem& t) const { return t * t + mu * t + lam; }
    Elem derivative(const Elem& t) const { return t + t + mu; }
};

struct CharData {
    Elem trace;
    Elem det;
    MonicQuadratic chi;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Mat2 operator*(const Elem& s, const Mat2& x);

Elem trace(const Mat2& x);
Elem det(const Mat2& x);
CharData char_data(const Mat2& x);

bool is_gl2(const Mat2& x);
/// J(M_2(R)) = M_2(J(R)) for commutative R.
bool is_in_radical_m2(const Mat2& x);

/// Closed-form 2x2 inverse; NotInvertible when det is not a unit.
Mat2 inverse(const Mat2& x);
/// P * A * P^-1.
Mat2 conjugate(const Mat2& p, const Mat2& a);

Mat2 elementary_b12(const Elem& s);
Mat2 elementary_b21(const Elem& s);
Mat2 diag(const Elem& x, const Elem& y);
/// [[0,1],[1,0]]
Mat2 swap_matrix(const RingPtr& ring);

/// "a,b;c,d" with each entry in the element literal grammar.
Mat2 parse_matrix(std::string_view text, const RingPtr& ring);
std::string to_string(const Mat2& x);

}  // namespace rclean
