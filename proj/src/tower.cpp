#include <sstream>

#include "imult/context.hpp"
#include "imult/densepoly.hpp"

namespace imult {
namespace tower {

namespace {

/// Ring of tower elements at a fixed level. Values are TowerVals of uniform
/// depth == level. invert raises SplitRequest on zero divisors; the level of
/// the offending modulus is pinned when the split is first raised.
struct TowerRing {
    using value_type = TowerVal;
    const ContextData* ctx;
    std::size_t level;

    value_type zero() const { return tower::zero(level); }
    value_type one() const { return tower::one(level); }
    value_type from_long(long n) const { return from_rational(Rational(n), level); }
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
    [[noreturn]] void raise_split(TowerPoly g, TowerPoly cofactor) const {
        throw SplitRequest{level, {std::move(g), std::move(cofactor)}};
    }
};

void trim(TowerPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

TowerVal zero(std::size_t level) {
    if (level == 0) return TowerVal(Rational(0));
    return TowerVal(TowerPoly{});
}

TowerVal one(std::size_t level) {
    return from_rational(Rational(1), level);
}

TowerVal from_rational(const Rational& r, std::size_t level) {
    if (level == 0) return TowerVal(r);
    if (r.is_zero()) return TowerVal(TowerPoly{});
    return TowerVal(TowerPoly{from_rational(r, level - 1)});
}

TowerVal lift(const TowerVal& a, std::size_t from_level, std::size_t to_level) {
    TowerVal v = a;
    for (std::size_t l = from_level; l < to_level; ++l) {
        if (v.is_zero())
            v = TowerVal(TowerPoly{});
        else
            v = TowerVal(TowerPoly{std::move(v)});
    }
    return v;
}

TowerVal add(const TowerVal& a, const TowerVal& b, std::size_t level) {
    if (level == 0) return TowerVal(a.leaf() + b.leaf());
    TowerPoly r(std::max(a.vec().size(), b.vec().size()), zero(level - 1));
    for (std::size_t i = 0; i < a.vec().size(); ++i) r[i] = a.vec()[i];
    for (std::size_t i = 0; i < b.vec().size(); ++i) r[i] = add(r[i], b.vec()[i], level - 1);
    trim(r);
    return TowerVal(std::move(r));
}

TowerVal neg(const TowerVal& a, std::size_t level) {
    if (level == 0) return TowerVal(-a.leaf());
    TowerPoly r = a.vec();
    for (auto& c : r) c = neg(c, level - 1);
    return TowerVal(std::move(r));
}

TowerVal sub(const TowerVal& a, const TowerVal& b, std::size_t level) {
    return add(a, neg(b, level), level);
}

TowerVal mul(const TowerVal& a, const TowerVal& b, const ContextData& ctx, std::size_t level) {
    if (level == 0) return TowerVal(a.leaf() * b.leaf());
    if (a.is_zero() || b.is_zero()) return TowerVal(TowerPoly{});
    TowerRing ring{&ctx, level - 1};
    TowerPoly prod = p_mul(ring, a.vec(), b.vec());
    if (p_deg<TowerRing>(prod) >= p_deg<TowerRing>(ctx.generators[level - 1].modulus))
        prod = p_rem_monic(ring, prod, ctx.generators[level - 1].modulus);
    return TowerVal(std::move(prod));
}

TowerVal invert(const TowerVal& a, const ContextData& ctx, std::size_t level) {
    if (a.is_zero()) throw math_error("division by zero");
    if (level == 0) return TowerVal(a.leaf().inverse());
    // Constant in the top generator: invert one level down.
    if (a.vec().size() == 1)
        return TowerVal(TowerPoly{invert(a.vec()[0], ctx, level - 1)});
    TowerRing ring{&ctx, level - 1};
    TowerPoly inv = p_invert_mod(ring, a.vec(), ctx.generators[level - 1].modulus);
    trim(inv);
    return TowerVal(std::move(inv));
}

bool as_rational(const TowerVal& a, Rational* out) {
    const TowerVal* v = &a;
    while (!v->is_leaf()) {
        if (v->vec().empty()) {
            if (out) *out = Rational(0);
            return true;
        }
        if (v->vec().size() > 1) return false;
        v = &v->vec()[0];
    }
    if (out) *out = v->leaf();
    return true;
}

namespace {

// Collects "coeff * t_i^e * ..." monomial strings recursively.
void render(const TowerVal& a, const ContextData& ctx, std::size_t level,
            const std::string& suffix, std::vector<std::string>* out) {
    if (level == 0) {
        if (a.leaf().is_zero()) return;
        std::string c = a.leaf().str();
        if (suffix.empty()) {
            out->push_back(c);
        } else if (a.leaf().is_one()) {
            out->push_back(suffix.substr(1));  // drop leading '*'
        } else if (a.leaf() == Rational(-1)) {
            out->push_back("-" + suffix.substr(1));
        } else {
            out->push_back(c + suffix);
        }
        return;
    }
    const std::string& name = ctx.generators[level - 1].name;
    const auto& v = a.vec();
    for (std::size_t e = v.size(); e-- > 0;) {
        std::string s = suffix;
        if (e == 1) s = "*" + name + s;
        else if (e > 1) s = "*" + name + "^" + std::to_string(e) + s;
        render(v[e], ctx, level - 1, s, out);
    }
}

}  // namespace

std::string to_string(const TowerVal& a, const ContextData& ctx, std::size_t level) {
    std::vector<std::string> monomials;
    render(a, ctx, level, "", &monomials);
    if (monomials.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const std::string& m = monomials[i];
        if (i == 0) {
            os << m;
        } else if (!m.empty() && m[0] == '-') {
            os << " - " << m.substr(1);
        } else {
            os << " + " << m;
        }
    }
    return os.str();
}

}  // namespace tower
}  // namespace imult
