#ifndef IMULT_BIPOLY_HPP
#define IMULT_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imult/field.hpp"
#include "imult/unipoly.hpp"

namespace imult {

/// Sparse bivariate polynomial over an extension context: exponent pair
/// (degree in x, degree in y) -> nonzero coefficient. The zero polynomial
/// stores nothing. Degrees stay sparse along the blowup recursion, so a map
/// keyed by exponents (deterministic order) is the representation of record.
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, TowerVal>;

    BiPoly() : ctx_(ExtensionContext::rationals()) {}  // zero over Q
    explicit BiPoly(ExtensionContext ctx) : ctx_(std::move(ctx)) {}

    static BiPoly zero(const ExtensionContext& ctx) { return BiPoly(ctx); }
    static BiPoly constant(const ExtensionContext& ctx, const Rational& r);
    static BiPoly variable_x(const ExtensionContext& ctx);
    static BiPoly variable_y(const ExtensionContext& ctx);
    /// Over Q: list of (i, j, coefficient).
    static BiPoly from_terms(const std::vector<std::tuple<int, int, Rational>>& terms);

    const ExtensionContext& context() const { return ctx_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    FieldElement coeff(int i, int j) const;
    void set_coeff(int i, int j, const FieldElement& c);

    int total_degree() const;  // -1 for zero
    int deg_x() const;
    int deg_y() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly scaled(const FieldElement& c) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    FieldElement eval(const FieldElement& x, const FieldElement& y) const;
    Rational eval_q(const Rational& x, const Rational& y) const;  // over Q

    BiPoly lifted_to(const ExtensionContext& bigger) const;

    std::string str() const;

private:
    void add_term(int i, int j, const TowerVal& v);
    ExtensionContext ctx_;
    TermMap t_;
    friend BiPoly project(const ContextSplit&, const BiPoly&, std::size_t);
    friend class BiPolyBuilder;
};

/// Accumulating builder; coalesces terms and drops zeros once at the end.
class BiPolyBuilder {
public:
    explicit BiPolyBuilder(const ExtensionContext& ctx) : p_(ctx) {}
    void add(int i, int j, const TowerVal& v);
    BiPoly take();

private:
    BiPoly p_;
};

struct LowestForm {
    int order;    // multiplicity at the origin
    BiPoly form;  // homogeneous of degree `order`, nonzero
};

/// Lowest-degree homogeneous part; order 0 when the constant term is present.
LowestForm lowest_form(const BiPoly& f);

struct StrictTransform {
    int order;   // the power of the exceptional coordinate divided out
    BiPoly poly;
};

/// First blowup chart: x^m * result = f(x, x*y) exactly, m = lowest order.
/// Computed as the exponent remap (i, j) -> (i + j - m, j); no division.
StrictTransform chart1_strict_transform(const BiPoly& f);
/// Second chart: y^m * result = f(x*y, y) exactly: (i, j) -> (i, i + j - m).
StrictTransform chart2_strict_transform(const BiPoly& f);

/// Exact substitution y -> y + r.
BiPoly shift_y(const BiPoly& f, const FieldElement& r);
/// Exact substitution x -> x + px, y -> y + py.
BiPoly translate(const BiPoly& f, const FieldElement& px, const FieldElement& py);

/// The univariate polynomial f(0, y).
UniPoly eval_x0(const BiPoly& f);

/// General substitution f(u(x,y), v(x,y)); used by tests and affine maps.
BiPoly compose(const BiPoly& f, const BiPoly& u, const BiPoly& v);

BiPoly project(const ContextSplit& split, const BiPoly& f, std::size_t branch);

/// Gcd in Q[x,y] by primitive PRS over Q[x][y]; result integer-primitive with
/// positive leading coefficient in graded-lex order. Inputs must be over Q.
BiPoly bivar_gcd_q(const BiPoly& f, const BiPoly& g);

/// Sound fast path: true certifies gcd(f, g) is constant (established in
/// Z_p[x,y] for primes that preserve the graded-lex leading coefficients);
/// false means undecided and the caller must compute the exact gcd.
bool bivar_gcd_known_trivial(const BiPoly& f, const BiPoly& g);

/// Sylvester resultant with respect to y, eliminating y; over Q.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

}  // namespace imult

#endif
