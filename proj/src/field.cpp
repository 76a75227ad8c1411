#include "imult/field.hpp"

#include "imult/densepoly.hpp"
#include "imult/errors.hpp"
#include "imult/unipoly.hpp"

namespace imult {

FieldElement FieldElement::generator(const ExtensionContext& ctx, std::size_t i) {
    if (i >= ctx.size()) throw usage_error("generator index out of range");
    // t_i is the degree-1 monomial at level i+1, lifted to the full tower.
    TowerVal gen{TowerPoly{tower::zero(i), tower::one(i)}};
    return FieldElement(ctx, tower::lift(gen, i + 1, ctx.size()));
}

void FieldElement::check_contexts(const FieldElement& a, const FieldElement& b) {
    if (!a.ctx_.compatible_with(b.ctx_))
        throw usage_error("field elements from different extension contexts");
}

FieldElement FieldElement::lifted_to(const ExtensionContext& bigger) const {
    if (bigger.size() < ctx_.size())
        throw usage_error("lift target is not an extension of the source context");
    for (std::size_t i = 0; i < ctx_.size(); ++i)
        if (bigger.generator(i).modulus != ctx_.generator(i).modulus)
            throw usage_error("lift target does not extend the source tower");
    return {bigger, tower::lift(v_, ctx_.size(), bigger.size())};
}

// --- ContextSplit -----------------------------------------------------------

ContextSplit::ContextSplit(const ExtensionContext& parent, const SplitRequest& req)
    : parent_(parent), level_(req.level), factors_(req.factors) {
    if (level_ >= parent.size()) throw internal_error("split level outside the tower");
    if (factors_.size() < 2) throw internal_error("split needs at least two factors");
    for (const TowerPoly& f : factors_) {
        if (f.size() < 2) throw internal_error("split factor must be non-constant");
        if (f.back() != tower::one(level_))
            throw internal_error("split factor must be monic");
        roots_.emplace_back();
        if (f.size() == 2) roots_.back() = tower::neg(f[0], level_);

        // Rebuild the tower: generators below the split level are shared;
        // the split generator keeps the cofactor (or vanishes when linear);
        // moduli above are projected coefficient by coefficient.
        ExtensionContext ctx = ExtensionContext::rationals();
        for (std::size_t i = 0; i < level_; ++i)
            ctx = ctx.extended(parent.generator(i).name, parent.generator(i).modulus);
        const std::size_t b = roots_.size() - 1;
        if (!roots_.back())
            ctx = ctx.extended(parent.generator(level_).name, f);
        for (std::size_t i = level_ + 1; i < parent.size(); ++i) {
            TowerPoly m;
            m.reserve(parent.generator(i).modulus.size());
            for (const TowerVal& c : parent.generator(i).modulus)
                m.push_back(project_at(c, i, b));
            ctx = ctx.extended(parent.generator(i).name, std::move(m));
        }
        branches_.push_back(std::move(ctx));
    }
}

// Projects a value living at `level` in the parent tower into branch b.
// Declared in the header via project_val for full-depth elements; moduli of
// higher generators go through the same path at their own level.
TowerVal ContextSplit::project_at(const TowerVal& a, std::size_t level, std::size_t b) const {
    if (level <= level_) return a;  // below the split: untouched
    if (level == level_ + 1) {
        // Polynomial in the split generator: reduce by the cofactor or
        // substitute the explicit root.
        struct Ring {
            const ContextData* ctx;
            std::size_t level;
            using value_type = TowerVal;
            value_type zero() const { return tower::zero(level); }
            value_type one() const { return tower::one(level); }
            value_type from_long(long n) const {
                return tower::from_rational(Rational(n), level);
            }
            bool is_zero(const value_type& v) const { return v.is_zero(); }
            value_type add(const value_type& x, const value_type& y) const {
                return tower::add(x, y, level);
            }
            value_type sub(const value_type& x, const value_type& y) const {
                return tower::sub(x, y, level);
            }
            value_type neg(const value_type& x) const { return tower::neg(x, level); }
            value_type mul(const value_type& x, const value_type& y) const {
                return tower::mul(x, y, *ctx, level);
            }
        } ring{&parent_.data(), level_};
        if (roots_[b]) {
            // Horner evaluation at the root; the level collapses by one.
            TowerVal acc = tower::zero(level_);
            for (std::size_t i = a.vec().size(); i-- > 0;)
                acc = tower::add(tower::mul(acc, *roots_[b], parent_.data(), level_),
                                 a.vec()[i], level_);
            return acc;
        }
        TowerPoly r = a.vec();
        if (p_deg<Ring>(r) >= p_deg<Ring>(factors_[b]))
            r = p_rem_monic(ring, r, factors_[b]);
        return TowerVal(std::move(r));
    }
    // Above the split: map children, then trim trailing zeros.
    TowerPoly out;
    out.reserve(a.vec().size());
    for (const TowerVal& c : a.vec()) out.push_back(project_at(c, level - 1, b));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return TowerVal(std::move(out));
}

TowerVal ContextSplit::project_val(const TowerVal& a, std::size_t b) const {
    return project_at(a, parent_.size(), b);
}

FieldElement ContextSplit::project(const FieldElement& a, std::size_t b) const {
    if (!a.context().compatible_with(parent_))
        throw usage_error("projecting an element from a different context");
    return FieldElement(branches_[b], project_val(a.val(), b));
}

// --- invert / adjoin --------------------------------------------------------

InvertOutcome invert_or_split(const FieldElement& a) {
    if (a.is_zero()) throw math_error("division by zero");
    try {
        FieldElement inv(a.context(),
                         tower::invert(a.val(), a.context().data(), a.context().size()));
        return inv;
    } catch (const SplitRequest& req) {
        ContextSplit split(a.context(), req);
        std::vector<FieldElement> images;
        images.reserve(split.count());
        for (std::size_t b = 0; b < split.count(); ++b) images.push_back(split.project(a, b));
        return SplitOutcome{std::move(split), std::move(images)};
    }
}

FieldElement invert_or_throw(const FieldElement& a) {
    if (a.is_zero()) throw math_error("division by zero");
    return FieldElement(a.context(),
                        tower::invert(a.val(), a.context().data(), a.context().size()));
}

AdjoinResult adjoin_root(const ExtensionContext& ctx, const UniPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw internal_error("adjoin_root needs a non-constant polynomial");
    if (!p.is_monic()) throw internal_error("adjoin_root needs a monic polynomial");
    if (!p.context().compatible_with(ctx))
        throw usage_error("adjoin_root: polynomial context mismatch");
    if (p.degree() == 1) {
        return AdjoinResult{ctx, -p.coeff(0), 1};
    }
    if (ctx.is_rationals()) {
        // Cheap squarefreeness check; over Q the gcd cannot split.
        UniPoly g = uni_gcd(p, p.derivative());
        if (g.degree() != 0) throw internal_error("adjoin_root: modulus is not squarefree");
    }
    std::string name = "t" + std::to_string(ctx.size() + 1);
    ExtensionContext bigger = ctx.extended(std::move(name), p.raw());
    return AdjoinResult{bigger, FieldElement::generator(bigger, ctx.size()),
                        static_cast<std::size_t>(p.degree())};
}

}  // namespace imult
