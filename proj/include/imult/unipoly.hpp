#ifndef IMULT_UNIPOLY_HPP
#define IMULT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "imult/field.hpp"

namespace imult {

/// Dense univariate polynomial over an extension context. Index = degree,
/// no trailing zeros, the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() : ctx_(ExtensionContext::rationals()) {}  // zero over Q
    explicit UniPoly(ExtensionContext ctx) : ctx_(std::move(ctx)) {}
    UniPoly(ExtensionContext ctx, TowerPoly coeffs);

    static UniPoly zero(const ExtensionContext& ctx) { return UniPoly(ctx); }
    static UniPoly one(const ExtensionContext& ctx);
    static UniPoly variable(const ExtensionContext& ctx);  // the monomial y
    static UniPoly from_coeffs(const ExtensionContext& ctx,
                               const std::vector<FieldElement>& coeffs);
    static UniPoly from_rationals(const std::vector<Rational>& coeffs);  // over Q

    const ExtensionContext& context() const { return ctx_; }
    const TowerPoly& raw() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;
    bool is_monic() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const FieldElement& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    /// Lift to an extension of this context.
    UniPoly lifted_to(const ExtensionContext& bigger) const;

    std::string str(const std::string& var = "y") const;

private:
    ExtensionContext ctx_;
    TowerPoly c_;
};

/// Division with remainder by a monic divisor (exact, no inversions).
void divrem_monic(const UniPoly& a, const UniPoly& b, UniPoly* quot, UniPoly* rem);

/// Monic Euclidean gcd. Over a tower this may discover a zero divisor and
/// throw SplitRequest; uni_gcd_split is the branch-materializing wrapper.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

/// Monic squarefree part p / gcd(p, p'); may throw SplitRequest over towers.
UniPoly squarefree_part(const UniPoly& p);

/// Makes p monic; may throw SplitRequest.
UniPoly monic(const UniPoly& p);

/// Euclidean gcd with dynamic evaluation: every inversion goes through
/// invert-or-split and a split forks the computation, so the result is one
/// monic gcd per branch context. Over Q this is always a single branch.
std::vector<std::pair<ExtensionContext, UniPoly>> uni_gcd_split(const UniPoly& p,
                                                                const UniPoly& q);

UniPoly project(const ContextSplit& split, const UniPoly& p, std::size_t branch);

}  // namespace imult

#endif
