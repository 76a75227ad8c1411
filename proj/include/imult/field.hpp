#ifndef IMULT_FIELD_HPP
#define IMULT_FIELD_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "imult/context.hpp"

namespace imult {

class UniPoly;

/// Scalar of an extension tower: a context handle plus a fully reduced
/// coefficient tree. Values are immutable in spirit; all operations return
/// fresh elements. Mixing contexts is a usage_error.
class FieldElement {
public:
    FieldElement() : ctx_(ExtensionContext::rationals()), v_(tower::zero(0)) {}
    FieldElement(ExtensionContext ctx, TowerVal v) : ctx_(std::move(ctx)), v_(std::move(v)) {}

    static FieldElement from_rational(const ExtensionContext& ctx, const Rational& r) {
        return FieldElement(ctx, tower::from_rational(r, ctx.size()));
    }
    /// The i-th generator as an element of ctx.
    static FieldElement generator(const ExtensionContext& ctx, std::size_t i);

    const ExtensionContext& context() const { return ctx_; }
    const TowerVal& val() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == tower::one(ctx_.size()); }

    /// True (and sets *out) when the element is a rational constant.
    bool as_rational(Rational* out = nullptr) const { return tower::as_rational(v_, out); }

    FieldElement operator-() const { return {ctx_, tower::neg(v_, ctx_.size())}; }
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_contexts(a, b);
        return {a.ctx_, tower::add(a.v_, b.v_, a.ctx_.size())};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_contexts(a, b);
        return {a.ctx_, tower::sub(a.v_, b.v_, a.ctx_.size())};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_contexts(a, b);
        return {a.ctx_, tower::mul(a.v_, b.v_, a.ctx_.data(), a.ctx_.size())};
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_contexts(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Lift into a context extending this one (same tower prefix).
    FieldElement lifted_to(const ExtensionContext& bigger) const;

    std::string str() const { return tower::to_string(v_, ctx_.data(), ctx_.size()); }

private:
    static void check_contexts(const FieldElement& a, const FieldElement& b);
    ExtensionContext ctx_;
    TowerVal v_;
};

/// A materialized split of one context into coprime branches: the quotient by
/// each cofactor of the factored modulus. Degree-1 cofactors eliminate the
/// generator (the root becomes explicit); everything above the split level is
/// projected. Projection is the CRT ring map onto each branch.
class ContextSplit {
public:
    ContextSplit(const ExtensionContext& parent, const SplitRequest& req);

    const ExtensionContext& parent() const { return parent_; }
    std::size_t level() const { return level_; }
    std::size_t count() const { return branches_.size(); }
    const ExtensionContext& branch(std::size_t b) const { return branches_[b]; }
    /// Degree of branch b's cofactor (1 when the generator was eliminated).
    std::size_t factor_degree(std::size_t b) const { return factors_[b].size() - 1; }

    TowerVal project_val(const TowerVal& a, std::size_t b) const;
    FieldElement project(const FieldElement& a, std::size_t b) const;

private:
    TowerVal project_at(const TowerVal& a, std::size_t level, std::size_t b) const;
    ExtensionContext parent_;
    std::size_t level_;
    std::vector<TowerPoly> factors_;
    std::vector<ExtensionContext> branches_;
    std::vector<std::optional<TowerVal>> roots_;  // set when factor degree 1
};

struct SplitOutcome {
    ContextSplit split;
    std::vector<FieldElement> images;  // projection of the input per branch
};

using InvertOutcome = std::variant<FieldElement, SplitOutcome>;

/// Dynamic-evaluation inversion: either certifies a unit (a * inverse == 1)
/// or returns the split exposed by the failed inversion, with the input
/// projected into every branch. Zero input is a math_error.
InvertOutcome invert_or_split(const FieldElement& a);

/// Convenience: inverse or throw the SplitRequest (for callers that own
/// split bookkeeping themselves).
FieldElement invert_or_throw(const FieldElement& a);

struct AdjoinResult {
    ExtensionContext ctx;
    FieldElement root;
    std::size_t relative_degree;
};

/// Adjoins one root of a monic squarefree p. Degree 1 returns the explicit
/// root in the unchanged context; otherwise the context grows by a generator
/// with modulus p and the root is that generator (relative degree = deg p).
AdjoinResult adjoin_root(const ExtensionContext& ctx, const UniPoly& p);

}  // namespace imult

#endif
