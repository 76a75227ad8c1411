#include <doctest.h>

#include <random>

#include "imult/parser.hpp"

using namespace imult;

namespace {

const ExtensionContext kQ = ExtensionContext::rationals();

Rational coeff_q(const BiPoly& p, int i, int j) {
    Rational r;
    REQUIRE(p.coeff(i, j).as_rational(&r));
    return r;
}

}  // namespace

TEST_CASE("parses the worked-example inputs") {
    BiPoly f = parse_poly("5x^2+6xy+5y^2-10y");
    CHECK(coeff_q(f, 2, 0) == Rational(5));
    CHECK(coeff_q(f, 1, 1) == Rational(6));
    CHECK(coeff_q(f, 0, 2) == Rational(5));
    CHECK(coeff_q(f, 0, 1) == Rational(-10));
    CHECK(f.term_count() == 4);

    BiPoly g = parse_poly("(x/2)^4 + (x/2)^2*y^2 - 2*(x/2)^2*y - (x/2)*y^2 + y^2");
    CHECK(coeff_q(g, 4, 0) == Rational(Integer(1), Integer(16)));
    CHECK(coeff_q(g, 2, 2) == Rational(Integer(1), Integer(4)));
    CHECK(coeff_q(g, 2, 1) == Rational(Integer(-1), Integer(2)));
    CHECK(coeff_q(g, 1, 2) == Rational(Integer(-1), Integer(2)));
    CHECK(coeff_q(g, 0, 2) == Rational(1));
}

TEST_CASE("implicit multiplication and signs") {
    CHECK(parse_poly("5x^2y") == parse_poly("5*x^2*y"));
    CHECK(parse_poly("-x") == -BiPoly::variable_x(kQ));
    CHECK(parse_poly("x(y-1)") == parse_poly("x*y-x"));
    CHECK(parse_poly("2(x+y)(x-y)") == parse_poly("2x^2-2y^2"));
    CHECK(parse_poly("5-3") == BiPoly::constant(kQ, Rational(2)));
    CHECK(parse_poly("x--y") == parse_poly("x+y"));
    CHECK(parse_poly("x/2/2") == parse_poly("x/4"));
    CHECK(parse_poly("  x +\t y ") == parse_poly("x+y"));
}

TEST_CASE("division restrictions") {
    CHECK_THROWS_AS(parse_poly("x/y"), parse_error);
    CHECK_THROWS_AS(parse_poly("x/(y-y)"), parse_error);
    CHECK_THROWS_AS(parse_poly("x/0"), parse_error);
    CHECK(parse_poly("x/(2+3)") == parse_poly("x/5"));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_poly("x + @");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
    try {
        parse_poly("(x+y");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("x^"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^0"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^99999"), parse_error);
    CHECK_THROWS_AS(parse_poly("x y +"), parse_error);
}

TEST_CASE("point parsing") {
    RatPoint p = parse_point("-1/2,3");
    CHECK(p.x == Rational(Integer(-1), Integer(2)));
    CHECK(p.y == Rational(3));
    CHECK_THROWS_AS(parse_point("12"), parse_error);
    CHECK_THROWS_AS(parse_point("a,b"), parse_error);
}

TEST_CASE("render/parse round-trip on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        BiPoly p(kQ);
        const int terms = 1 + static_cast<int>(rng() % 8);
        for (int t = 0; t < terms; ++t) {
            const int i = static_cast<int>(rng() % 5), j = static_cast<int>(rng() % 5);
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = 1 + static_cast<long>(rng() % 6);
            p.set_coeff(i, j,
                        FieldElement::from_rational(kQ, Rational(Integer(num), Integer(den))));
        }
        if (p.is_zero()) continue;
        CHECK(parse_poly(render_poly(p)) == p);
    }
}
