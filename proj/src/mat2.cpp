#include "rclean/mat2.hpp"

#include <array>
#include <vector>

namespace rclean {

Mat2::Mat2(Elem a_, Elem b_, Elem c_, Elem d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (!same_ring(a.ring(), b.ring()) || !same_ring(a.ring(), c.ring()) || !same_ring(a.ring(), d.ring()))
        throw AlgebraError(ErrorKind::RingMismatch, "matrix entries from different rings");
}

Mat2 Mat2::zero(const RingPtr& ring) { return from_ints(ring, 0, 0, 0, 0); }

Mat2 Mat2::identity(const RingPtr& ring) { return from_ints(ring, 1, 0, 0, 1); }

Mat2 Mat2::from_ints(const RingPtr& ring, long a, long b, long c, long d) {
    return {Elem::integer(ring, a), Elem::integer(ring, b), Elem::integer(ring, c), Elem::integer(ring, d)};
}

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Mat2 operator*(const Elem& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Elem trace(const Mat2& x) { return x.a + x.d; }

Elem det(const Mat2& x) { return x.a * x.d - x.b * x.c; }

CharData char_data(const Mat2& x) {
    Elem tr = trace(x);
    Elem dt = det(x);
    return {tr, dt, MonicQuadratic{-tr, dt}};
}

bool is_gl2(const Mat2& x) { return is_unit(det(x)); }

bool is_in_radical_m2(const Mat2& x) {
    return is_in_radical(x.a) && is_in_radical(x.b) && is_in_radical(x.c) && is_in_radical(x.d);
}

Mat2 inverse(const Mat2& x) {
    const Elem dt = det(x);
    if (!is_unit(dt)) throw AlgebraError(ErrorKind::NotInvertible, "det " + to_string(dt) + " is not a unit");
    const Elem inv = try_invert(dt);
    return {inv * x.d, -(inv * x.b), -(inv * x.c), inv * x.a};
}

Mat2 conjugate(const Mat2& p, const Mat2& a) { return p * a * inverse(p); }

Mat2 elementary_b12(const Elem& s) {
    const auto& r = s.ring();
    return {Elem::one(r), s, Elem::zero(r), Elem::one(r)};
}

Mat2 elementary_b21(const Elem& s) {
    const auto& r = s.ring();
    return {Elem::one(r), Elem::zero(r), s, Elem::one(r)};
}

Mat2 diag(const Elem& x, const Elem& y) { return {x, Elem::zero(x.ring()), Elem::zero(x.ring()), y}; }

Mat2 swap_matrix(const RingPtr& ring) { return Mat2::from_ints(ring, 0, 1, 1, 0); }

Mat2 parse_matrix(std::string_view text, const RingPtr& ring) {
    // Split on ',' and ';' outside brackets; series literals carry their own commas.
    std::vector<std::string_view> cells;
    std::vector<char> separators;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '[') ++depth;
        else if (ch == ']') --depth;
        else if (depth == 0 && (ch == ',' || ch == ';')) {
            cells.push_back(text.substr(start, i - start));
            separators.push_back(ch);
            start = i + 1;
        }
        if (depth < 0) throw AlgebraError(ErrorKind::ParseError, "unbalanced ']' at position " + std::to_string(i));
    }
    cells.push_back(text.substr(start));
    if (cells.size() != 4 || separators != std::vector<char>{',', ';', ','})
        throw AlgebraError(ErrorKind::ParseError, "matrix literal must look like 'a,b;c,d', got '" + std::string(text) + "'");
    return {parse_elem(cells[0], ring), parse_elem(cells[1], ring), parse_elem(cells[2], ring), parse_elem(cells[3], ring)};
}

std::string to_string(const Mat2& x) {
    return to_string(x.a) + "," + to_string(x.b) + ";" + to_string(x.c) + "," + to_string(x.d);
}

}  // namespace rclean
