#include "doctest.h"
#include "rclean/mat2.hpp"
#include "test_support.hpp"

using namespace rclean;

namespace {

const RingPtr z4 = Ring::zmod(2, 2);

Mat2 M(const RingPtr& ring, const char* text) { return parse_matrix(text, ring); }

}  // namespace

TEST_CASE("matrix products") {
    const Mat2 a = M(z4, "2,3;0,2");
    CHECK(a * a == Mat2::zero(z4));
    CHECK(conjugate(Mat2::identity(z4), a) == a);
    CHECK(elementary_b21(Elem::integer(z4, -2)) * M(z4, "1,2;2,1") == M(z4, "1,2;0,1"));
    CHECK(Elem::integer(z4, 2) * M(z4, "1,1;1,3") == M(z4, "2,2;2,2"));
    CHECK(-M(z4, "1,0;0,1") == M(z4, "3,0;0,3"));
}

TEST_CASE("char_data examples") {
    auto cd = char_data(M(z4, "2,3;0,2"));
    CHECK(cd.trace.is_zero());
    CHECK(cd.det.is_zero());

    const auto zloc3 = Ring::zloc(3);
    cd = char_data(M(zloc3, "2,1;-1,1"));
    CHECK(cd.trace == Elem::integer(zloc3, 3));
    CHECK(cd.det == Elem::integer(zloc3, 3));
    CHECK(cd.chi.mu == Elem::integer(zloc3, -3));
    CHECK(cd.chi.lam == Elem::integer(zloc3, 3));

    for (const auto& ring : {z4, zloc3, Ring::padic(5, 4)}) {
        cd = char_data(Mat2::identity(ring));
        CHECK(cd.trace == Elem::integer(ring, 2));
        CHECK(cd.det == Elem::one(ring));
    }
}

TEST_CASE("membership examples") {
    CHECK(is_gl2(M(z4, "1,1;1,0")));
    CHECK_FALSE(is_gl2(M(Ring::padic(2, 32), "1,1;1,1")));
    CHECK_FALSE(is_gl2(M(z4, "2,3;0,2")));

    CHECK(is_in_radical_m2(M(z4, "2,2;0,2")));
    CHECK_FALSE(is_in_radical_m2(M(z4, "2,3;0,2")));
    CHECK(is_in_radical_m2(Mat2::zero(z4)));
}

TEST_CASE("elementary matrices") {
    CHECK(elementary_b12(Elem::zero(z4)) == Mat2::identity(z4));
    CHECK(elementary_b21(Elem::one(z4)) == M(z4, "1,0;1,1"));
    CHECK(diag(Elem::integer(z4, 2), Elem::one(z4)) == M(z4, "2,0;0,1"));
    const Elem s = Elem::integer(z4, 3);
    CHECK(inverse(elementary_b12(s)) == elementary_b12(-s));
    CHECK(inverse(elementary_b21(s)) == elementary_b21(-s));
}

TEST_CASE("conjugating by a singular matrix fails") {
    try {
        conjugate(M(z4, "2,0;0,1"), Mat2::identity(z4));
        FAIL("no throw");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
}

TEST_CASE("matrix literals") {
    const auto s = Ring::parse("Series(Zmod:4;3)");
    const Mat2 a = M(s, "[1,2],[0,1];0,[3,0,1]");
    CHECK(a.b == parse_elem("[0,1]", s));
    CHECK(to_string(a) == "[1,2,0],[0,1,0];[0,0,0],[3,0,1]");
    CHECK(M(z4, " 1 , 2 ; 3 , 0 ") == M(z4, "1,2;3,0"));
    for (const char* bad : {"1,2,3,4", "1;2;3;4", "1,2;3", "1,2;3,4;5", "[1,2;3,4"}) {
        CAPTURE(bad);
        try {
            M(z4, bad);
            FAIL("accepted");
        } catch (const AlgebraError& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
}

TEST_CASE("Cayley-Hamilton holds on all of M_2(Z/4)") {
    std::size_t count = 0;
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b)
            for (long c = 0; c < 4; ++c)
                for (long d = 0; d < 4; ++d) {
                    const Mat2 x = Mat2::from_ints(z4, a, b, c, d);
                    CHECK(x * x - trace(x) * x + det(x) * Mat2::identity(z4) == Mat2::zero(z4));
                    CHECK_FALSE((is_gl2(x) && is_in_radical_m2(x)));
                    ++count;
                }
    CHECK(count == 256);
}

TEST_CASE("matrix properties on random matrices") {
    std::mt19937_64 rng(4242);
    for (const auto& ring : testing::property_rings()) {
        CAPTURE(ring->to_string());
        const Mat2 id = Mat2::identity(ring);
        for (int i = 0; i < 25; ++i) {
            const Mat2 x = testing::random_matrix(ring, rng);
            const Mat2 y = testing::random_matrix(ring, rng);
            CHECK(x * x - trace(x) * x + det(x) * id == Mat2::zero(ring));
            CHECK(det(x * y) == det(x) * det(y));
            CHECK_FALSE((is_gl2(x) && is_in_radical_m2(x)));
            if (is_in_radical_m2(x)) CHECK(is_gl2(id - x));

            const Mat2 p = testing::random_gl2(ring, rng);
            REQUIRE(is_gl2(p));
            CHECK(p * inverse(p) == id);
            const Mat2 z = conjugate(p, x);
            CHECK(trace(z) == trace(x));
            CHECK(det(z) == det(x));
        }
    }
}
