#ifndef IMULT_BLOWUP_HPP
#define IMULT_BLOWUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "imult/bipoly.hpp"

namespace imult {

struct RatPoint {
    Rational x, y;
};

/// Intersection multiplicity: a non-negative integer, or infinite when a
/// common component passes through the point.
struct IMValue {
    bool infinite = false;
    std::uint64_t value = 0;

    static IMValue inf() { return {true, 0}; }
    static IMValue finite(std::uint64_t v) { return {false, v}; }
    friend bool operator==(const IMValue& a, const IMValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const IMValue& a, const IMValue& b) { return !(a == b); }
};

/// One node of the tree of shared infinitely near points. The root is the
/// intersection point itself; children are the shared first-order points of
/// the strict transforms, one node per conjugacy branch.
struct ConfigNode {
    int depth = 0;
    int chart = 0;  // 0 = the point P itself, else the chart (1 or 2)
    /// y-coordinate of the near point in its chart; absent for the root.
    std::optional<FieldElement> root;
    /// Minimal polynomial of the root when it generated an extension.
    std::optional<UniPoly> root_minpoly;
    std::size_t conjugate_count = 1;
    int m_f = 0, m_g = 0;
    std::uint64_t local_product = 0;  // m_f * m_g
    /// conjugate_count * (local_product + sum of children subtree values)
    std::uint64_t subtree_value = 0;
    std::vector<ConfigNode> children;
};

struct BlowupStats {
    std::uint64_t blowup_count = 0;
    int max_depth = 0;
    std::uint64_t extensions_created = 0;
    std::int64_t elapsed_micros = 0;
};

struct IMReport {
    IMValue value;
    std::optional<ConfigNode> tree;  // present iff finite and P on both curves
    BlowupStats stats;
};

/// Multiplicity of the curve at a rational point: the order of the lowest
/// nonzero form after moving the point to the origin.
int multiplicity_at(const BiPoly& f, const RatPoint& p);

/// Multiplicity at the origin (any context, representation-based).
int multiplicity_origin(const BiPoly& f);

/// A branch of shared first-order infinitely near points: the context that
/// houses the y-coordinate, the coordinate itself, and how many conjugate
/// points the branch stands for.
struct Direction {
    ExtensionContext ctx = ExtensionContext::rationals();
    FieldElement root;
    std::size_t conjugate_count = 1;
    std::optional<UniPoly> minpoly;  // set when the root is symbolic
};

/// Shared directions of two strict transforms: the distinct common roots of
/// gcd(f1(0,y), g1(0,y)), grouped by conjugacy. Rational roots are listed
/// explicitly; what remains is adjoined lazily as one symbolic branch.
/// May throw SplitRequest when the working context itself splits.
std::vector<Direction> shared_directions(const BiPoly& f1, const BiPoly& g1,
                                         BlowupStats* stats = nullptr);

/// The recursion of the blowup algorithm at the origin of f's context.
/// Requires both curves to vanish at the origin and the caller to have ruled
/// out a common component. Returns the per-point value (the parent applies
/// the conjugate weight) and the configuration subtree.
std::pair<std::uint64_t, ConfigNode> im_origin(const BiPoly& f, const BiPoly& g, int depth,
                                               int guard, BlowupStats* stats);

/// Full algorithm over Q at a rational point: common-component test, zero
/// law, then the blowup recursion with guard deg(f)*deg(g) + 1.
IMReport intersection_multiplicity(const BiPoly& f, const BiPoly& g, const RatPoint& P);

}  // namespace imult

#endif
