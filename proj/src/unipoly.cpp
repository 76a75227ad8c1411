#include "imult/unipoly.hpp"

#include <deque>
#include <sstream>

#include "imult/densepoly.hpp"

namespace imult {

namespace {

/// Coefficient ring for UniPoly algorithms: tower elements at full depth.
struct ElemRing {
    using value_type = TowerVal;
    const ContextData* ctx;
    std::size_t level;

    value_type zero() const { return tower::zero(level); }
    value_type one() const { return tower::one(level); }
    value_type from_long(long n) const { return tower::from_rational(Rational(n), level); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const {
        return tower::add(a, b, level);
    }
    value_type sub(const value_type& a, const value_type& b) const {
        return tower::sub(a, b, level);
    }
    value_type neg(const value_type& a) const { return tower::neg(a, level); }
    value_type mul(const value_type& a, const value_type& b) const {
        return tower::mul(a, b, *ctx, level);
    }
    value_type invert(const value_type& a) const { return tower::invert(a, *ctx, level); }
};

ElemRing ring_of(const ExtensionContext& ctx) { return ElemRing{&ctx.data(), ctx.size()}; }

void check_same(const UniPoly& a, const UniPoly& b) {
    if (!a.context().compatible_with(b.context()))
        throw usage_error("univariate polynomials from different contexts");
}

}  // namespace

UniPoly::UniPoly(ExtensionContext ctx, TowerPoly coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::one(const ExtensionContext& ctx) {
    return UniPoly(ctx, TowerPoly{tower::one(ctx.size())});
}

UniPoly UniPoly::variable(const ExtensionContext& ctx) {
    return UniPoly(ctx, TowerPoly{tower::zero(ctx.size()), tower::one(ctx.size())});
}

UniPoly UniPoly::from_coeffs(const ExtensionContext& ctx,
                             const std::vector<FieldElement>& coeffs) {
    TowerPoly c;
    c.reserve(coeffs.size());
    for (const FieldElement& e : coeffs) {
        if (!e.context().compatible_with(ctx))
            throw usage_error("coefficient context mismatch");
        c.push_back(e.val());
    }
    return UniPoly(ctx, std::move(c));
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs) {
    TowerPoly c;
    c.reserve(coeffs.size());
    for (const Rational& r : coeffs) c.push_back(tower::from_rational(r, 0));
    return UniPoly(ExtensionContext::rationals(), std::move(c));
}

FieldElement UniPoly::coeff(std::size_t i) const {
    if (i >= c_.size()) return FieldElement::from_rational(ctx_, Rational(0));
    return FieldElement(ctx_, c_[i]);
}

FieldElement UniPoly::leading() const {
    if (c_.empty()) throw math_error("leading coefficient of zero polynomial");
    return FieldElement(ctx_, c_.back());
}

bool UniPoly::is_monic() const {
    return !c_.empty() && c_.back() == tower::one(ctx_.size());
}

UniPoly UniPoly::operator-() const {
    return UniPoly(ctx_, p_neg(ring_of(ctx_), c_));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    check_same(a, b);
    return UniPoly(a.ctx_, p_add(ring_of(a.ctx_), a.c_, b.c_));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    check_same(a, b);
    return UniPoly(a.ctx_, p_sub(ring_of(a.ctx_), a.c_, b.c_));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    check_same(a, b);
    return UniPoly(a.ctx_, p_mul(ring_of(a.ctx_), a.c_, b.c_));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    if (!c.context().compatible_with(ctx_)) throw usage_error("scalar context mismatch");
    return UniPoly(ctx_, p_scale(ring_of(ctx_), c_, c.val()));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    check_same(a, b);
    return a.c_ == b.c_;
}

UniPoly UniPoly::derivative() const {
    return UniPoly(ctx_, p_derivative(ring_of(ctx_), c_));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    if (!x.context().compatible_with(ctx_)) throw usage_error("eval context mismatch");
    return FieldElement(ctx_, p_eval(ring_of(ctx_), c_, x.val()));
}

UniPoly UniPoly::lifted_to(const ExtensionContext& bigger) const {
    TowerPoly c;
    c.reserve(c_.size());
    for (const TowerVal& v : c_) c.push_back(tower::lift(v, ctx_.size(), bigger.size()));
    // Validate the extension relation through FieldElement::lifted_to once.
    if (!c_.empty()) FieldElement(ctx_, c_.front()).lifted_to(bigger);
    else FieldElement::from_rational(ctx_, Rational(0)).lifted_to(bigger);
    return UniPoly(bigger, std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = tower::to_string(c_[i], ctx_.data(), ctx_.size());
        bool negated = false;
        if (!first && cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            cs = cs.substr(1);
            negated = true;
        }
        os << (first ? "" : (negated ? " - " : " + "));
        first = false;
        const bool needs_parens = cs.find(' ') != std::string::npos && i > 0;
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1" && !needs_parens) {
                os << "-";
            } else if (needs_parens) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void divrem_monic(const UniPoly& a, const UniPoly& b, UniPoly* quot, UniPoly* rem) {
    check_same(a, b);
    if (!b.is_monic()) throw usage_error("divrem_monic needs a monic divisor");
    TowerPoly q, r;
    p_divrem_monic(ring_of(a.context()), a.raw(), b.raw(), &q, &r);
    if (quot) *quot = UniPoly(a.context(), std::move(q));
    if (rem) *rem = UniPoly(a.context(), std::move(r));
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) throw math_error("monic part of zero polynomial");
    return UniPoly(p.context(), p_monic(ring_of(p.context()), p.raw()));
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
    check_same(p, q);
    if (p.is_zero() && q.is_zero()) throw math_error("gcd of two zero polynomials");
    return UniPoly(p.context(), p_gcd_monic(ring_of(p.context()), p.raw(), q.raw()));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw math_error("squarefree part of zero polynomial");
    return UniPoly(p.context(), p_squarefree(ring_of(p.context()), p.raw()));
}

std::vector<std::pair<ExtensionContext, UniPoly>> uni_gcd_split(const UniPoly& p,
                                                                const UniPoly& q) {
    check_same(p, q);
    if (p.is_zero() && q.is_zero()) throw math_error("gcd of two zero polynomials");
    std::vector<std::pair<ExtensionContext, UniPoly>> out;
    std::deque<std::pair<UniPoly, UniPoly>> work;
    work.emplace_back(p, q);
    while (!work.empty()) {
        auto [a, b] = std::move(work.front());
        work.pop_front();
        try {
            out.emplace_back(a.context(), uni_gcd(a, b));
        } catch (const SplitRequest& req) {
            ContextSplit split(a.context(), req);
            for (std::size_t i = 0; i < split.count(); ++i)
                work.emplace_back(project(split, a, i), project(split, b, i));
        }
    }
    return out;
}

UniPoly project(const ContextSplit& split, const UniPoly& p, std::size_t branch) {
    if (!p.context().compatible_with(split.parent()))
        throw usage_error("projecting a polynomial from a different context");
    TowerPoly c;
    c.reserve(p.raw().size());
    for (const TowerVal& v : p.raw()) c.push_back(split.project_val(v, branch));
    return UniPoly(split.branch(branch), std::move(c));
}

}  // namespace imult
