#include "doctest.h"
#include "rclean/ring.hpp"
#include "test_support.hpp"

using namespace rclean;

namespace {

const RingPtr z4 = Ring::zmod(2, 2);
const RingPtr z9 = Ring::zmod(3, 2);
const RingPtr zloc3 = Ring::zloc(3);
const RingPtr s4_3 = Ring::series(z4, 3);

Elem E(const RingPtr& r, const char* text) { return parse_elem(text, r); }

}  // namespace

TEST_CASE("ring specs parse and print") {
    CHECK(Ring::parse("Zmod:4")->to_string() == "Zmod:4");
    CHECK(Ring::parse("Zmod:4")->prime() == 2);
    CHECK(Ring::parse("Zmod:4")->exponent() == 2);
    CHECK(Ring::parse("Zmod:9")->prime() == 3);
    CHECK(Ring::parse("Zmod:7")->exponent() == 1);
    CHECK(Ring::parse("Zloc:3")->family() == Family::Zloc);
    CHECK(Ring::parse("Padic:2:32")->modulus() == mpz_class("4294967296"));
    CHECK(Ring::parse("Series(Zmod:4;8)")->order() == 8);
    const auto nested = Ring::parse("Series(Series(Zmod:4;4);3)");
    CHECK(nested->series_depth() == 2);
    CHECK(nested->to_string() == "Series(Series(Zmod:4;4);3)");
    CHECK(nested->scalar_base().family() == Family::Zmod);
    CHECK(*Ring::parse("Zmod:4") == *z4);

    for (const char* bad : {"Zmod:6", "Zmod:1", "Zmod:", "Zloc:4", "Padic:2", "Padic:2:0", "Series(Zmod:4;0)", "Series(Zmod:4)", "Foo:3", "Zmod:x"}) {
        CAPTURE(bad);
        try {
            Ring::parse(bad);
            FAIL("accepted an invalid spec");
        } catch (const AlgebraError& e) {
            CHECK(e.kind() == ErrorKind::InvalidRingSpec);
        }
    }
}

TEST_CASE("arith examples") {
    CHECK(arith(ArithOp::Mul, E(z4, "3"), E(z4, "3")) == E(z4, "1"));
    CHECK(arith(ArithOp::Add, E(zloc3, "1/2"), E(zloc3, "1/2")) == E(zloc3, "1"));
    CHECK(arith(ArithOp::Mul, E(s4_3, "[1,2]"), E(s4_3, "[1,2]")) == Elem::one(s4_3));
    CHECK(arith(ArithOp::Neg, E(z9, "2"), E(z9, "0")) == E(z9, "7"));
    CHECK(E(z9, "2") - E(z9, "5") == E(z9, "6"));
    CHECK(to_string(E(zloc3, "1/2") * E(zloc3, "4/5")) == "2/5");
}

TEST_CASE("mixing rings is an error") {
    try {
        (void)(E(z4, "1") + E(z9, "1"));
        FAIL("no throw");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::RingMismatch);
    }
    const auto p8 = Ring::padic(2, 8);
    const auto p16 = Ring::padic(2, 16);
    try {
        (void)(Elem::one(p8) * Elem::one(p16));
        FAIL("no throw");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::PrecisionMismatch);
    }
    // Same description, different objects: still the same ring.
    CHECK(Elem::one(Ring::zmod(2, 2)) + Elem::one(Ring::parse("Zmod:4")) == E(z4, "2"));
}

TEST_CASE("unit and radical examples") {
    CHECK(is_unit(E(z4, "3")));
    CHECK_FALSE(is_unit(E(zloc3, "6/5")));
    CHECK(is_unit(E(s4_3, "[1,2]")));

    CHECK(is_in_radical(E(z4, "2")));
    CHECK_FALSE(is_in_radical(E(Ring::padic(2, 8), "7")));
    CHECK(is_in_radical(E(s4_3, "[0,2]")));
    CHECK(is_in_radical(Elem::zero(zloc3)));
}

TEST_CASE("try_invert examples") {
    CHECK(try_invert(E(z4, "3")) == E(z4, "3"));
    CHECK(try_invert(E(z9, "2")) == E(z9, "5"));
    CHECK(try_invert(E(s4_3, "[1,2]")) == E(s4_3, "[1,2]"));
    CHECK(try_invert(E(zloc3, "-2/7")) == E(zloc3, "-7/2"));
    try {
        try_invert(E(z9, "6"));
        FAIL("no throw");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::NotAUnit);
    }
}

TEST_CASE("parse examples and errors") {
    CHECK(E(z4, "7") == E(z4, "3"));
    CHECK(E(z4, "-1") == E(z4, "3"));
    const Elem f = E(zloc3, "-1/5");
    CHECK(f.fraction().get_num() == -1);
    CHECK(f.fraction().get_den() == 5);
    CHECK(E(zloc3, "6/4") == E(zloc3, "3/2"));
    const Elem two_x = E(s4_3, "[0,2]");
    CHECK(two_x.coeffs().size() == 3);
    CHECK(to_string(two_x) == "[0,2,0]");
    CHECK(E(s4_3, "5") == E(s4_3, "[1]"));
    CHECK(E(s4_3, "[1,2,3,1]") == E(s4_3, "[1,2,3]"));
    CHECK(to_string(E(Ring::parse("Series(Series(Zmod:4;2);2)"), "[[1,1],3]")) == "[[1,1],[3,0]]");

    auto expect = [](const char* text, const RingPtr& ring, ErrorKind kind) {
        CAPTURE(text);
        try {
            parse_elem(text, ring);
            FAIL("accepted");
        } catch (const AlgebraError& e) {
            CHECK(e.kind() == kind);
        }
    };
    expect("1/3", zloc3, ErrorKind::DenominatorNotUnit);
    expect("1/6", zloc3, ErrorKind::DenominatorNotUnit);
    expect("1/0", zloc3, ErrorKind::ParseError);
    expect("1/2", z9, ErrorKind::ParseError);
    expect("[1,2]", z4, ErrorKind::ParseError);
    expect("", z4, ErrorKind::ParseError);
    expect("12a", z4, ErrorKind::ParseError);
    expect("4/-2", zloc3, ErrorKind::ParseError);
    expect("[1,2", s4_3, ErrorKind::ParseError);

    try {
        parse_elem("12a", z4);
    } catch (const AlgebraError& e) {
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("local dichotomy is exhaustive over small Zmod rings") {
    for (const auto& [p, k] : std::vector<std::pair<unsigned long, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {3, 3}, {7, 1}}) {
        const auto ring = Ring::zmod(p, k);
        const long n = ring->modulus().get_si();
        for (long v = 0; v < n; ++v) {
            const Elem a = Elem::integer(ring, v);
            CHECK(is_unit(a) != is_in_radical(a));
            CHECK(is_unit(a) == (v % static_cast<long>(p) != 0));
            if (is_in_radical(a)) CHECK(is_unit(Elem::one(ring) + a));
        }
    }
}

TEST_CASE("ring properties on random elements") {
    std::mt19937_64 rng(20261018);
    for (const auto& ring : testing::property_rings()) {
        CAPTURE(ring->to_string());
        for (int i = 0; i < 60; ++i) {
            const Elem a = random_elem(ring, rng);
            const Elem r = random_elem(ring, rng);
            CHECK(is_unit(a) != is_in_radical(a));
            if (is_in_radical(a)) {
                CHECK(is_in_radical(r * a));
                CHECK(is_unit(Elem::one(ring) + a));
            } else {
                CHECK(a * try_invert(a) == Elem::one(ring));
            }
            CHECK(parse_elem(to_string(a), ring) == a);
            if (ring->family() == Family::Series) CHECK(is_unit(a) == is_unit(a.coeffs().front()));
            CHECK((a + r) - r == a);
            CHECK(a * (r + Elem::one(ring)) == a * r + a);
        }
    }
}
