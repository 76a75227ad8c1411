#include <doctest.h>

#include "imult/fulton.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

const ExtensionContext kQ = ExtensionContext::rationals();
const RatPoint kOrigin{Rational(0), Rational(0)};

BiPoly P(const std::string& s) { return parse_poly(s); }

RatPoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

std::uint64_t value_at_origin(const std::string& f, const std::string& g) {
    IMReport r = intersection_multiplicity(P(f), P(g), kOrigin);
    REQUIRE(!r.value.infinite);
    return r.value.value;
}

/// conjugate_count * (m_f*m_g + sum of children) at every node.
void check_subtree_invariant(const ConfigNode& n) {
    std::uint64_t inner = n.local_product;
    for (const ConfigNode& c : n.children) {
        CHECK(c.depth == n.depth + 1);
        check_subtree_invariant(c);
        inner += c.subtree_value;
    }
    CHECK(n.subtree_value == n.conjugate_count * inner);
    CHECK(n.local_product ==
          static_cast<std::uint64_t>(n.m_f) * static_cast<std::uint64_t>(n.m_g));
}

}  // namespace

TEST_CASE("multiplicity_at") {
    CHECK(multiplicity_at(P("5x^2+6xy+5y^2-10y"), kOrigin) == 1);
    CHECK(multiplicity_at(P("2x^4-3x^2y+y^2-2y^3+y^4"), kOrigin) == 2);
    CHECK(multiplicity_at(P("x^2+y^2-2y"), pt(5, 5)) == 0);
    CHECK(multiplicity_at(P("x^2+(y-1)^2-1"), pt(0, 2)) == 1);
}

TEST_CASE("shared_directions on the circle/ellipse chain") {
    BiPoly f1 = P("5x+6xy+5xy^2-10y"), g1 = P("x+xy^2-2y");
    auto d1 = shared_directions(f1, g1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].ctx.is_rationals());
    CHECK(d1[0].conjugate_count == 1);
    CHECK(d1[0].root == FieldElement::from_rational(kQ, Rational(0)));

    BiPoly f2 = P("5+6xy+5x^2y^2-10y"), g2 = P("1+x^2y^2-2y");
    auto d2 = shared_directions(f2, g2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].conjugate_count == 1);
    CHECK(d2[0].root ==
          FieldElement::from_rational(kQ, Rational(Integer(1), Integer(2))));
}

TEST_CASE("shared_directions adjoins a symbolic root when forced") {
    BiPoly f1 = P("1+y^2+x"), g1 = P("1+y^2+xy^3");
    auto dirs = shared_directions(f1, g1);
    REQUIRE(dirs.size() == 1);
    CHECK(dirs[0].conjugate_count == 2);
    CHECK(dirs[0].ctx.absolute_degree() == 2);
    // The root satisfies y^2 + 1 = 0.
    FieldElement r = dirs[0].root;
    CHECK((r * r + FieldElement::from_rational(dirs[0].ctx, Rational(1))).is_zero());
}

TEST_CASE("shared_directions separates rational roots") {
    // gcd of sections is y^2 - 1: the two rational directions come back as
    // distinct branches, not one symbolic quadratic.
    StrictTransform f1 = chart1_strict_transform(P("(x^2+y^2)^2-(x^2-y^2)"));
    StrictTransform g1 = chart1_strict_transform(P("(x^2+y^2)^3-(x^2-y^2)^2"));
    auto dirs = shared_directions(f1.poly, g1.poly);
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0].conjugate_count == 1);
    CHECK(dirs[1].conjugate_count == 1);
    CHECK(dirs[0].root == FieldElement::from_rational(kQ, Rational(-1)));
    CHECK(dirs[1].root == FieldElement::from_rational(kQ, Rational(1)));
}

TEST_CASE("im_origin golden chains") {
    BlowupStats stats;
    auto [v1, n1] = im_origin(P("5x^2+6xy+5y^2-10y"), P("x^2+y^2-2y"), 0, 5, &stats);
    CHECK(v1 == 3);
    // 1*1 at each of three levels.
    CHECK(n1.local_product == 1);
    REQUIRE(n1.children.size() == 1);
    CHECK(n1.children[0].local_product == 1);
    REQUIRE(n1.children[0].children.size() == 1);
    CHECK(n1.children[0].children[0].local_product == 1);
    CHECK(n1.children[0].children[0].children.empty());
    check_subtree_invariant(n1);

    BlowupStats s2;
    auto [v2, n2] =
        im_origin(P("(x^2+y^2)^2-(x^2-y^2)"), P("(x^2+y^2)^3-(x^2-y^2)^2"), 0, 25, &s2);
    CHECK(v2 == 12);
    CHECK(n2.local_product == 8);  // 2*4
    REQUIRE(n2.children.size() == 2);
    CHECK(n2.children[0].subtree_value == 2);
    CHECK(n2.children[1].subtree_value == 2);
    check_subtree_invariant(n2);

    // I(x, x - y^2) = 2: one unit from the origin, one through the second chart.
    BlowupStats s3;
    auto [v3, n3] = im_origin(P("x"), P("x-y^2"), 0, 3, &s3);
    CHECK(v3 == 2);
    REQUIRE(n3.children.size() == 1);
    CHECK(n3.children[0].chart == 2);
    check_subtree_invariant(n3);
}

TEST_CASE("intersection_multiplicity golden values") {
    CHECK(value_at_origin("5x^2+6xy+5y^2-10y", "x^2+(y-1)^2-1") == 3);
    CHECK(value_at_origin("2x^4-3x^2y+y^2-2y^3+y^4",
                          "x^4+x^2y^2-2x^2y-xy^2+y^2") == 9);
    CHECK(value_at_origin("(x^2+y^2)^2-(x^2-y^2)", "(x^2+y^2)^3-(x^2-y^2)^2") == 12);
}

TEST_CASE("tacnode/ramphoid chain is 2*2 + 2*2 + 1*1") {
    IMReport r = intersection_multiplicity(P("2x^4-3x^2y+y^2-2y^3+y^4"),
                                           P("x^4+x^2y^2-2x^2y-xy^2+y^2"), kOrigin);
    REQUIRE(r.tree.has_value());
    const ConfigNode& root = *r.tree;
    CHECK(root.local_product == 4);
    REQUIRE(root.children.size() == 1);
    CHECK(root.children[0].local_product == 4);
    REQUIRE(root.children[0].children.size() == 1);
    CHECK(root.children[0].children[0].local_product == 1);
    check_subtree_invariant(root);
    CHECK(r.stats.max_depth == 2);
}

TEST_CASE("infinite when a common component passes through the point") {
    IMReport r = intersection_multiplicity(P("x*(y-x^2)"), P("x*(y+x^2)"), kOrigin);
    CHECK(r.value.infinite);
    CHECK(!r.tree.has_value());
    // Same pair away from the shared component: finite.
    IMReport r2 = intersection_multiplicity(P("x*(y-x^2)"), P("x*(y+x^2)"), pt(1, 1));
    CHECK(!r2.value.infinite);
}

TEST_CASE("zero when the point misses one curve") {
    IMReport r = intersection_multiplicity(P("x"), P("y-1"), kOrigin);
    CHECK(r.value == IMValue::finite(0));
    CHECK(!r.tree.has_value());
}

TEST_CASE("extension branch with two conjugates") {
    IMReport r = intersection_multiplicity(P("x^2+y^2+x^3"), P("x^2+y^2+y^3"), kOrigin);
    REQUIRE(!r.value.infinite);
    CHECK(r.value.value == 6);
    REQUIRE(r.tree.has_value());
    REQUIRE(r.tree->children.size() == 1);
    CHECK(r.tree->children[0].conjugate_count == 2);
    CHECK(r.tree->children[0].root_minpoly.has_value());
    CHECK(r.stats.extensions_created >= 1);
    check_subtree_invariant(*r.tree);
    // The oracle agrees.
    FultonOutcome o = fulton_im(P("x^2+y^2+x^3"), P("x^2+y^2+y^3"), kOrigin, 1000000);
    REQUIRE(o.kind == FultonOutcome::Kind::Finite);
    CHECK(o.value == 6);
}

TEST_CASE("printed-scaled ramphoid variant stays consistent with the oracle") {
    // Regression value computed by both routes; the trace differs from the
    // unscaled variant because the second-level direction is not shared.
    const std::string f = "2x^4-3x^2y+y^2-2y^3+y^4";
    const std::string g = "(x/2)^4 + (x/2)^2*y^2 - 2*(x/2)^2*y - (x/2)*y^2 + y^2";
    IMReport r = intersection_multiplicity(P(f), P(g), kOrigin);
    FultonOutcome o = fulton_im(P(f), P(g), kOrigin, 1000000);
    REQUIRE(!r.value.infinite);
    REQUIRE(o.kind == FultonOutcome::Kind::Finite);
    CHECK(r.value.value == o.value);
    CHECK(r.value.value == 8);
}

TEST_CASE("mid-recursion split refines conjugate branches") {
    // Directions are the four roots of (y^2-2)(y^2-3); the second level is
    // shared only above y^2-2, so the lazily adjoined quartic must split.
    const std::string f = "(y^2-2x^2)*(y^2-3x^2)+x^4y";
    const std::string g = "(y^2-2x^2)*(y^2-3x^2)+x^4y+x^3*(y^2-2x^2)";
    IMReport r = intersection_multiplicity(P(f), P(g), kOrigin);
    REQUIRE(!r.value.infinite);
    FultonOutcome o = fulton_im(P(f), P(g), kOrigin, 10000000);
    REQUIRE(o.kind == FultonOutcome::Kind::Finite);
    CHECK(r.value.value == o.value);
    REQUIRE(r.tree.has_value());
    check_subtree_invariant(*r.tree);
    // Two branches after the split, two conjugates each.
    REQUIRE(r.tree->children.size() == 2);
    std::size_t conj = 0;
    for (const ConfigNode& c : r.tree->children) conj += c.conjugate_count;
    CHECK(conj == 4);
}

TEST_CASE("deeper contact along one conjugate pair only") {
    // Same quartic tangent cone with a perturbation sharing only the y^2-3
    // directions to second order; exercises the split in the other order.
    const std::string f = "(y^2-2x^2)*(y^2-3x^2)+x^4y";
    const std::string g = "(y^2-2x^2)*(y^2-3x^2)+x^4y+x^3*(y^2-3x^2)";
    IMReport r = intersection_multiplicity(P(f), P(g), kOrigin);
    FultonOutcome o = fulton_im(P(f), P(g), kOrigin, 10000000);
    REQUIRE(!r.value.infinite);
    REQUIRE(o.kind == FultonOutcome::Kind::Finite);
    CHECK(r.value.value == o.value);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(intersection_multiplicity(P("7"), P("x"), kOrigin), math_error);
    CHECK_THROWS_AS(intersection_multiplicity(P("x"), BiPoly::zero(kQ), kOrigin), math_error);
}

TEST_CASE("report fields") {
    IMReport r = intersection_multiplicity(P("x"), P("y"), kOrigin);
    CHECK(r.value == IMValue::finite(1));
    REQUIRE(r.tree.has_value());
    CHECK(r.tree->children.empty());
    CHECK(r.stats.blowup_count == 1);
    CHECK(r.stats.elapsed_micros >= 0);
}
