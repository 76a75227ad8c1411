#include <doctest.h>

#include "imult/fulton.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

const RatPoint kOrigin{Rational(0), Rational(0)};

BiPoly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("fulton oracle on the worked pairs") {
    FultonOutcome a =
        fulton_im(P("5x^2+6xy+5y^2-10y"), P("x^2+(y-1)^2-1"), kOrigin, 100000);
    REQUIRE(a.kind == FultonOutcome::Kind::Finite);
    CHECK(a.value == 3);

    FultonOutcome b = fulton_im(P("(x^2+y^2)^2-(x^2-y^2)"), P("(x^2+y^2)^3-(x^2-y^2)^2"),
                                kOrigin, 100000);
    REQUIRE(b.kind == FultonOutcome::Kind::Finite);
    CHECK(b.value == 12);

    FultonOutcome c = fulton_im(P("x"), P("y"), kOrigin, 100);
    REQUIRE(c.kind == FultonOutcome::Kind::Finite);
    CHECK(c.value == 1);

    FultonOutcome d = fulton_im(P("2x^4-3x^2y+y^2-2y^3+y^4"),
                                P("x^4+x^2y^2-2x^2y-xy^2+y^2"), kOrigin, 100000);
    REQUIRE(d.kind == FultonOutcome::Kind::Finite);
    CHECK(d.value == 9);
}

TEST_CASE("fulton oracle respects the step budget") {
    FultonOutcome o =
        fulton_im(P("5x^2+6xy+5y^2-10y"), P("x^2+(y-1)^2-1"), kOrigin, 2);
    CHECK(o.kind == FultonOutcome::Kind::Exhausted);
    CHECK(o.steps == 2);
}

TEST_CASE("fulton oracle away from the curves") {
    FultonOutcome o = fulton_im(P("x"), P("y-1"), kOrigin, 100);
    REQUIRE(o.kind == FultonOutcome::Kind::Finite);
    CHECK(o.value == 0);
    CHECK_THROWS_AS(fulton_im(P("3"), P("y"), kOrigin, 10), math_error);
}

TEST_CASE("common_component_through") {
    CHECK(common_component_through(P("x*(y-x^2)"), P("x*(y+x^2)"), kOrigin));
    CHECK(!common_component_through(P("x*(y-x^2)"), P("x*(y+x^2)"),
                                    {Rational(1), Rational(1)}));
    CHECK(!common_component_through(P("5x^2+6xy+5y^2-10y"), P("x^2+(y-1)^2-1"), kOrigin));
}

TEST_CASE("resultant order diagnostic") {
    ResultantDiagnostic d1 = resultant_order_diagnostic(P("y-x"), P("y+x"));
    CHECK(d1.applicable);
    CHECK(d1.order == 1);

    ResultantDiagnostic d2 = resultant_order_diagnostic(P("y-x^2"), P("y"));
    CHECK(d2.applicable);
    CHECK(d2.order == 2);

    // The ellipse and circle also meet at (0,2), a second common point on
    // the line x = 0: the guard must reject, and the order aggregates both
    // local values (3 at the origin plus a transversal 1 at (0,2)).
    ResultantDiagnostic d3 =
        resultant_order_diagnostic(P("5x^2+6xy+5y^2-10y"), P("x^2+(y-1)^2-1"));
    CHECK(!d3.applicable);
    CHECK(d3.order == 4);

    // Tangent curves with the origin as the only common point on x = 0.
    ResultantDiagnostic d3b = resultant_order_diagnostic(P("y-x^2"), P("y-x^3"));
    CHECK(d3b.applicable);
    CHECK(d3b.order == 2);
    IMReport blow = intersection_multiplicity(P("y-x^2"), P("y-x^3"),
                                              {Rational(0), Rational(0)});
    CHECK(blow.value == IMValue::finite(2));

    // Non-constant leading y-coefficient: guard rejects.
    ResultantDiagnostic d4 = resultant_order_diagnostic(P("x*y+y+x"), P("y-x"));
    CHECK(!d4.applicable);

    // A second common point on the line x = 0: guard rejects.
    ResultantDiagnostic d5 =
        resultant_order_diagnostic(P("y*(y-1)+x"), P("y*(y-1)+x*y^2+x^2"));
    CHECK(!d5.applicable);

    CHECK_THROWS_AS(resultant_order_diagnostic(P("x"), P("y")), math_error);
}

TEST_CASE("random_curve honors its spec") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomCurveSpec spec{5, 3, 10, seed};
        BiPoly c = random_curve(spec);
        CHECK(c.total_degree() == 5);
        CHECK(multiplicity_at(c, kOrigin) == 3);
    }
    RandomCurveSpec s1{4, 1, 10, 7};
    CHECK(multiplicity_at(random_curve(s1), kOrigin) == 1);
    // Determinism.
    RandomCurveSpec s2{6, 2, 10, 12345};
    CHECK(random_curve(s2) == random_curve(s2));
    CHECK_THROWS_AS(random_curve(RandomCurveSpec{3, 4, 10, 0}), usage_error);
}

TEST_CASE("oracle agrees with blowup on assorted fixed pairs") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"y-x^2", "y"},
        {"y^2-x^3", "y^2+x^3"},
        {"x^2+y^2-2y", "5x^2+6xy+5y^2-10y"},
        {"y^3-x^5", "y-x^2"},
        {"x^3-y^2", "x^2-y^3"},
        {"(y-x)*(y+x)", "y-x^3"},
    };
    for (const auto& [fs, gs] : pairs) {
        IMReport blow = intersection_multiplicity(P(fs), P(gs), kOrigin);
        FultonOutcome oracle = fulton_im(P(fs), P(gs), kOrigin, 10000000);
        REQUIRE(oracle.kind == FultonOutcome::Kind::Finite);
        REQUIRE(!blow.value.infinite);
        CHECK(blow.value.value == oracle.value);
    }
}
