#ifndef IMULT_CONTEXT_HPP
#define IMULT_CONTEXT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "imult/rational.hpp"

namespace imult {

// ---------------------------------------------------------------------------
// Extension towers with dynamic evaluation.
//
// The base field is Q. Algebraic numbers are adjoined as a tower of quotient
// extensions Q[t1]/(m1)[t2]/(m2)... where each modulus is monic, of degree
// >= 2, and squarefree over the ring below it. Moduli are NOT required to be
// irreducible: the quotient may be a product of fields. Arithmetic proceeds
// as if over a field; when an inversion runs into a zero divisor, the
// offending modulus factors into coprime cofactors and the computation is
// split into one branch per cofactor (the D5 / dynamic evaluation idea).
// The split is raised as a SplitRequest exception and materialized by
// whichever caller owns the bookkeeping for that generator.
// ---------------------------------------------------------------------------

/// Coefficient tree for one element of a tower.
///
/// An element over a tower of k generators is a dense polynomial in the k-th
/// generator whose coefficients are elements over the first k-1 generators;
/// over the empty tower it is a plain Rational. Depth is uniform (the level
/// is implied by the tower, not stored). Trailing zero coefficients are
/// trimmed, the zero polynomial is the empty vector, so representations are
/// canonical and equality is structural.
class TowerVal {
public:
    TowerVal() : v_(Rational()) {}
    explicit TowerVal(Rational r) : v_(std::move(r)) {}
    explicit TowerVal(std::vector<TowerVal> coeffs) : v_(std::move(coeffs)) {}

    bool is_leaf() const { return std::holds_alternative<Rational>(v_); }
    const Rational& leaf() const { return std::get<Rational>(v_); }
    const std::vector<TowerVal>& vec() const { return std::get<std::vector<TowerVal>>(v_); }
    std::vector<TowerVal>& vec() { return std::get<std::vector<TowerVal>>(v_); }

    /// Canonical zero test: zero leaf at level 0, empty vector above.
    bool is_zero() const {
        return is_leaf() ? leaf().is_zero() : vec().empty();
    }

    friend bool operator==(const TowerVal& a, const TowerVal& b) { return a.v_ == b.v_; }
    friend bool operator!=(const TowerVal& a, const TowerVal& b) { return !(a.v_ == b.v_); }

private:
    std::variant<Rational, std::vector<TowerVal>> v_;
};

using TowerPoly = std::vector<TowerVal>;  // dense, trimmed, coeffs one level down

struct Generator {
    std::string name;   // display only; never part of equality
    TowerPoly modulus;  // monic, deg >= 2, squarefree over the subtower
};

struct ContextData {
    std::vector<Generator> generators;
    std::uint64_t absolute_degree = 1;  // product of modulus degrees
};

/// Immutable handle to a tower. Copies share the underlying data; extending
/// or splitting always creates a new context.
class ExtensionContext {
public:
    /// The empty tower, i.e. Q itself.
    static ExtensionContext rationals();

    std::size_t size() const { return d_->generators.size(); }
    bool is_rationals() const { return d_->generators.empty(); }
    const Generator& generator(std::size_t i) const { return d_->generators[i]; }
    std::uint64_t absolute_degree() const { return d_->absolute_degree; }
    const ContextData& data() const { return *d_; }

    /// New context with one more generator on top. The modulus coefficients
    /// live over this context; monicity and degree >= 2 are checked.
    ExtensionContext extended(std::string name, TowerPoly modulus) const;

    /// Structural ring equality (same modulus towers; names ignored).
    bool compatible_with(const ExtensionContext& o) const;

    std::string describe() const;  // e.g. "Q" or "Q[t1]/(t1^2+1)"

private:
    explicit ExtensionContext(std::shared_ptr<const ContextData> d) : d_(std::move(d)) {}
    std::shared_ptr<const ContextData> d_;
    friend class ContextSplit;
};

/// Raised when arithmetic discovers a factorization of one modulus.
/// `level` indexes the generator whose modulus splits; `factors` are monic
/// coprime cofactors over the subtower below it, degrees summing to the
/// modulus degree.
struct SplitRequest {
    std::size_t level;
    std::vector<TowerPoly> factors;
};

// --- tower-level arithmetic (detail; FieldElement wraps these) -------------
namespace tower {

TowerVal zero(std::size_t level);
TowerVal one(std::size_t level);
TowerVal from_rational(const Rational& r, std::size_t level);
/// Reinterprets a value over a shallower tower as one over a deeper tower.
TowerVal lift(const TowerVal& a, std::size_t from_level, std::size_t to_level);

TowerVal add(const TowerVal& a, const TowerVal& b, std::size_t level);
TowerVal sub(const TowerVal& a, const TowerVal& b, std::size_t level);
TowerVal neg(const TowerVal& a, std::size_t level);
TowerVal mul(const TowerVal& a, const TowerVal& b, const ContextData& ctx, std::size_t level);

/// Multiplicative inverse. Throws math_error on zero input and SplitRequest
/// when the input is a zero divisor.
TowerVal invert(const TowerVal& a, const ContextData& ctx, std::size_t level);

/// Rendering in terms of the generator names, e.g. "1/2*t1 + 3".
std::string to_string(const TowerVal& a, const ContextData& ctx, std::size_t level);

/// If the value is a rational constant (at any depth), extract it.
bool as_rational(const TowerVal& a, Rational* out);

}  // namespace tower

}  // namespace imult

#endif
