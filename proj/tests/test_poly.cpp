#include <doctest.h>

#include <random>

#include "imult/bipoly.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

const ExtensionContext kQ = ExtensionContext::rationals();

BiPoly P(const std::string& s) { return parse_poly(s); }

UniPoly U(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly::from_rationals(c);
}

BiPoly random_bipoly(std::mt19937_64& rng, int max_deg, int bound, bool through_origin) {
    BiPoly p(kQ);
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j) {
            if (through_origin && i == 0 && j == 0) continue;
            const long c =
                static_cast<long>(rng() % (2 * bound + 1)) - bound;
            if (c != 0) p.set_coeff(i, j, FieldElement::from_rational(kQ, Rational(c)));
        }
    return p;
}

}  // namespace

TEST_CASE("bivariate ring operations") {
    CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
    BiPoly f = P("5x^2+6xy+5y^2-10y");
    CHECK(f + BiPoly::zero(kQ) == f);
    CHECK(P("(y-x)*(y-2x)") == P("2x^2-3xy+y^2"));
    CHECK((f - f).is_zero());
}

TEST_CASE("lowest_form") {
    auto lf1 = lowest_form(P("5x^2+6xy+5y^2-10y"));
    CHECK(lf1.order == 1);
    CHECK(lf1.form == P("-10y"));

    auto lf2 = lowest_form(P("2x^4-3x^2y+y^2-2y^3+y^4"));
    CHECK(lf2.order == 2);
    CHECK(lf2.form == P("y^2"));

    auto lf3 = lowest_form(P("(x^2+y^2)^2-(x^2-y^2)"));
    CHECK(lf3.order == 2);
    CHECK(lf3.form == P("y^2-x^2"));

    CHECK_THROWS_AS(lowest_form(BiPoly::zero(kQ)), math_error);
}

TEST_CASE("chart-1 strict transform reproduces the blowup chain") {
    auto t1 = chart1_strict_transform(P("5x^2+6xy+5y^2-10y"));
    CHECK(t1.order == 1);
    CHECK(t1.poly == P("5x+6xy+5xy^2-10y"));

    auto t2 = chart1_strict_transform(P("5x+6xy+5xy^2-10y"));
    CHECK(t2.order == 1);
    CHECK(t2.poly == P("5+6xy+5x^2y^2-10y"));

    auto t3 = chart1_strict_transform(P("x^2+(y-1)^2-1"));
    CHECK(t3.order == 1);
    CHECK(t3.poly == P("x+xy^2-2y"));
}

TEST_CASE("chart-2 strict transform") {
    auto t1 = chart2_strict_transform(P("x"));
    CHECK(t1.order == 1);
    CHECK(t1.poly == P("x"));

    auto t2 = chart2_strict_transform(P("x-y^2"));
    CHECK(t2.order == 1);
    CHECK(t2.poly == P("x-y"));

    auto t3 = chart2_strict_transform(P("y"));
    CHECK(t3.order == 1);
    CHECK(t3.poly == P("1"));
}

TEST_CASE("shift_y and translate") {
    // f_2 of the circle/ellipse chain shifted to the shared point (0,1/2).
    BiPoly f2 = P("5+6xy+5x^2y^2-10y");
    BiPoly shifted = shift_y(f2, FieldElement::from_rational(kQ, Rational(Integer(1), Integer(2))));
    CHECK(shifted == P("5x^2y^2+5x^2y+(5/4)x^2+6xy+3x-10y"));  // hand expansion
    CHECK(shift_y(f2, FieldElement::from_rational(kQ, Rational(0))) == f2);
    CHECK(translate(P("x^2+y^2"), FieldElement::from_rational(kQ, Rational(0)),
                    FieldElement::from_rational(kQ, Rational(0))) == P("x^2+y^2"));
    // translate is substitution x -> x+px, y -> y+py
    CHECK(translate(P("x^2+y^2-2y"), FieldElement::from_rational(kQ, Rational(0)),
                    FieldElement::from_rational(kQ, Rational(1))) == P("x^2+y^2-1"));
}

TEST_CASE("eval_x0") {
    CHECK(eval_x0(P("5x+6xy+5xy^2-10y")) == U({0, -10}));
    CHECK(eval_x0(P("5+6xy+5x^2y^2-10y")) == U({5, -10}));
    CHECK(eval_x0(P("x^2-y^3")) == U({0, 0, 0, -1}));
}

TEST_CASE("uni_gcd_split over Q") {
    auto g1 = uni_gcd_split(U({0, -10}), U({0, -2}));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].second == U({0, 1}));  // y

    // (y-1)(y-2) vs (y-1)^2
    auto g2 = uni_gcd_split(U({2, -3, 1}), U({1, -2, 1}));
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].second == U({-1, 1}));

    // y^2 - 1 vs -(1-y^2)^2
    UniPoly a = U({-1, 0, 1});
    UniPoly sq = U({1, 0, -1}) * U({1, 0, -1});
    auto g3 = uni_gcd_split(a, -sq);
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].second == U({-1, 0, 1}));

    CHECK_THROWS_AS(uni_gcd_split(UniPoly::zero(kQ), UniPoly::zero(kQ)), math_error);
}

TEST_CASE("uni_gcd_split forks on zero divisors") {
    // Over Q[t]/(t^2 - t): gcd(y - t, y + t) differs between the branches
    // (the Euclidean remainder -2t is a zero divisor).
    UniPoly m = U({0, -1, 1});
    AdjoinResult adj = adjoin_root(ExtensionContext::rationals(), m);
    FieldElement t = adj.root;
    FieldElement one = FieldElement::from_rational(adj.ctx, Rational(1));
    UniPoly p = UniPoly::from_coeffs(adj.ctx, {-t, one});
    UniPoly q = UniPoly::from_coeffs(adj.ctx, {t, one});
    auto branches = uni_gcd_split(p, q);
    REQUIRE(branches.size() == 2);
    // t = 0 branch: gcd(y, y) = y;  t = 1 branch: gcd(y-1, y+1) = 1.
    bool saw_y = false, saw_one = false;
    for (const auto& [ctx, gcd] : branches) {
        CHECK(ctx.is_rationals());
        if (gcd == U({0, 1})) saw_y = true;
        if (gcd == U({1})) saw_one = true;
    }
    CHECK(saw_y);
    CHECK(saw_one);
}

TEST_CASE("uniform gcd over a reducible quotient needs no fork") {
    // t*y = t*(y + t - 1) in Q[t]/(t^2 - t): one branch, one gcd.
    UniPoly m = U({0, -1, 1});
    AdjoinResult adj = adjoin_root(ExtensionContext::rationals(), m);
    FieldElement t = adj.root;
    FieldElement one = FieldElement::from_rational(adj.ctx, Rational(1));
    UniPoly p = UniPoly::from_coeffs(
        adj.ctx, {FieldElement::from_rational(adj.ctx, Rational(0)), t});
    UniPoly q = UniPoly::from_coeffs(adj.ctx, {t - one, one});
    auto branches = uni_gcd_split(p, q);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].second == q);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(U({1, -2, 1})) == U({-1, 1}));     // (y-1)^2 -> y-1
    CHECK(squarefree_part(U({-1, 0, 1})) == U({-1, 0, 1}));  // already squarefree
    CHECK(squarefree_part(U({0, 0, -1, 1})) == U({0, -1, 1}));  // y^3-y^2 -> y^2-y
}

TEST_CASE("gcd and squarefree contracts on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> ca, cb;
        const int da = 1 + static_cast<int>(rng() % 5), db = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i <= da; ++i) ca.emplace_back(static_cast<long>(rng() % 11) - 5);
        for (int i = 0; i <= db; ++i) cb.emplace_back(static_cast<long>(rng() % 11) - 5);
        UniPoly a = UniPoly::from_rationals(ca), b = UniPoly::from_rationals(cb);
        if (a.is_zero() || b.is_zero()) continue;
        UniPoly g = uni_gcd(a, b);
        UniPoly qa, ra, qb, rb;
        divrem_monic(a, g, &qa, &ra);
        divrem_monic(b, g, &qb, &rb);
        CHECK(ra.is_zero());
        CHECK(rb.is_zero());
        if (!qa.is_zero() && !qb.is_zero()) CHECK(uni_gcd(qa, qb).degree() == 0);

        UniPoly sf = squarefree_part(a);
        CHECK(uni_gcd(sf, sf.derivative()).degree() == 0);
    }
}

TEST_CASE("strict-transform identity against independent composition") {
    // x^m * chart1(f) == f(x, x*y) and y^m * chart2(f) == f(x*y, y), with the
    // right side computed by generic composition rather than exponent remaps.
    std::mt19937_64 rng(99);
    const BiPoly X = BiPoly::variable_x(kQ), Y = BiPoly::variable_y(kQ);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly f = random_bipoly(rng, 4, 4, /*through_origin=*/true);
        if (f.is_zero()) continue;
        auto [m1, f1] = chart1_strict_transform(f);
        BiPoly xm = BiPoly::constant(kQ, Rational(1));
        for (int i = 0; i < m1; ++i) xm = xm * X;
        CHECK(xm * f1 == compose(f, X, X * Y));

        auto [m2, f2] = chart2_strict_transform(f);
        BiPoly ym = BiPoly::constant(kQ, Rational(1));
        for (int i = 0; i < m2; ++i) ym = ym * Y;
        CHECK(ym * f2 == compose(f, X * Y, Y));
    }
}

TEST_CASE("lowest forms are multiplicative") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        BiPoly u = random_bipoly(rng, 3, 3, true);
        BiPoly v = random_bipoly(rng, 3, 3, true);
        if (u.is_zero() || v.is_zero()) continue;
        auto lu = lowest_form(u), lv = lowest_form(v), luv = lowest_form(u * v);
        CHECK(luv.order == lu.order + lv.order);
        CHECK(luv.form == lu.form * lv.form);
    }
}

TEST_CASE("bivariate gcd over Q") {
    CHECK(bivar_gcd_q(P("x*(y-x^2)"), P("x*(y+x^2)")) == P("x"));
    CHECK(bivar_gcd_q(P("x+y"), P("x-y")) == P("1"));
    BiPoly f = P("2x^2-3xy+y^2");
    CHECK(bivar_gcd_q(f, f) == f);  // already integer-primitive, positive lead
    // Normalization clears rational content.
    CHECK(bivar_gcd_q(P("(1/2)x+(1/2)y"), P("x+y")) == P("x+y"));
    // Content and primitive parts combine; the graded-lex leading
    // coefficient of the normalized gcd is positive.
    CHECK(bivar_gcd_q(P("x^2*(y-x)*(y+x)"), P("x*(y-x)*(y-1)")) == P("x*(x-y)"));
    CHECK_THROWS_AS(bivar_gcd_q(BiPoly::zero(kQ), P("x")), math_error);
}

TEST_CASE("resultant_y on pinned examples") {
    CHECK(resultant_y(P("y-x"), P("y+x")) == U({0, 2}));  // 2x
    // Res(y, y-1) via the 2x2 determinant [[1,0],[1,-1]] = -1.
    CHECK(resultant_y(P("y"), P("y-1")) == U({-1}));
    BiPoly f = P("x^2+y^3-2xy");
    CHECK(resultant_y(f, f).is_zero());
}

TEST_CASE("resultant vanishes exactly on common y-factors") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        BiPoly a = random_bipoly(rng, 2, 3, false);
        BiPoly b = random_bipoly(rng, 2, 3, false);
        BiPoly c = random_bipoly(rng, 2, 3, false);
        if (a.deg_y() < 1 || b.deg_y() < 1 || c.deg_y() < 1) continue;
        // Shared factor c of positive y-degree forces a zero resultant.
        CHECK(resultant_y(a * c, b * c).is_zero());
    }
    // Coprime pair: the resultant is nonzero.
    CHECK(!resultant_y(P("y-x"), P("y-x+1")).is_zero());
}

TEST_CASE("unipoly eval and derivative") {
    UniPoly p = U({1, 2, 3});  // 3y^2 + 2y + 1
    FieldElement two = FieldElement::from_rational(kQ, Rational(2));
    Rational out;
    CHECK(p.eval(two).as_rational(&out));
    CHECK(out == Rational(17));
    CHECK(p.derivative() == U({2, 6}));
}
