#ifndef IMULT_DENSEPOLY_HPP
#define IMULT_DENSEPOLY_HPP

#include <utility>
#include <vector>

#include "imult/errors.hpp"

namespace imult {

// Dense univariate polynomial algorithms, generic over a coefficient ring.
//
// A ring R provides: value_type, zero(), one(), from_long(long),
// add/sub/mul/neg, is_zero, and (for the field-style algorithms) invert.
// Polynomials are std::vector<value_type>, index = degree, trailing zeros
// trimmed, zero = empty vector. Everything here is by-value and re-entrant.
//
// invert may throw (SplitRequest for tower rings); the algorithms below are
// written so that an invert throwing at any point leaves no state behind.

template <class R>
using PolyOf = std::vector<typename R::value_type>;

template <class R>
void p_trim(const R& ring, PolyOf<R>& a) {
    while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <class R>
int p_deg(const PolyOf<R>& a) {
    return static_cast<int>(a.size()) - 1;  // -1 for the zero polynomial
}

template <class R>
PolyOf<R> p_add(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    PolyOf<R> r(std::max(a.size(), b.size()), ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.add(r[i], b[i]);
    p_trim(ring, r);
    return r;
}

template <class R>
PolyOf<R> p_neg(const R& ring, const PolyOf<R>& a) {
    PolyOf<R> r = a;
    for (auto& c : r) c = ring.neg(c);
    return r;
}

template <class R>
PolyOf<R> p_sub(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    PolyOf<R> r(std::max(a.size(), b.size()), ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.sub(r[i], b[i]);
    p_trim(ring, r);
    return r;
}

template <class R>
PolyOf<R> p_mul(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    if (a.empty() || b.empty()) return {};
    PolyOf<R> r(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
    }
    p_trim(ring, r);
    return r;
}

template <class R>
PolyOf<R> p_scale(const R& ring, const PolyOf<R>& a, const typename R::value_type& c) {
    if (ring.is_zero(c)) return {};
    PolyOf<R> r = a;
    for (auto& x : r) x = ring.mul(x, c);
    p_trim(ring, r);
    return r;
}

template <class R>
PolyOf<R> p_derivative(const R& ring, const PolyOf<R>& a) {
    if (a.size() <= 1) return {};
    PolyOf<R> r(a.size() - 1, ring.zero());
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = ring.mul(a[i], ring.from_long(static_cast<long>(i)));
    p_trim(ring, r);
    return r;
}

template <class R>
typename R::value_type p_eval(const R& ring, const PolyOf<R>& a,
                              const typename R::value_type& x) {
    auto acc = ring.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), a[i]);
    return acc;
}

/// Division with remainder by a monic divisor. Needs ring operations only.
template <class R>
void p_divrem_monic(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b,
                    PolyOf<R>* quot, PolyOf<R>* rem) {
    if (b.empty()) throw math_error("polynomial division by zero");
    PolyOf<R> r = a;
    PolyOf<R> q;
    const int db = p_deg<R>(b);
    if (p_deg<R>(r) >= db) q.assign(r.size() - b.size() + 1, ring.zero());
    while (p_deg<R>(r) >= db) {
        const int k = p_deg<R>(r) - db;
        auto c = r.back();
        q[k] = c;
        // r -= c * x^k * b; the leading term cancels by construction
        for (int i = 0; i <= db; ++i)
            r[k + i] = ring.sub(r[k + i], ring.mul(c, b[i]));
        p_trim(ring, r);
    }
    p_trim(ring, q);
    if (quot) *quot = std::move(q);
    if (rem) *rem = std::move(r);
}

template <class R>
PolyOf<R> p_rem_monic(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    PolyOf<R> r;
    p_divrem_monic(ring, a, b, nullptr, &r);
    return r;
}

/// Makes a nonzero polynomial monic; the leading-coefficient inversion may
/// throw through from the ring.
template <class R>
PolyOf<R> p_monic(const R& ring, const PolyOf<R>& a) {
    if (a.empty()) throw math_error("monic part of zero polynomial");
    auto inv = ring.invert(a.back());
    return p_scale(ring, a, inv);
}

/// Monic gcd by the Euclidean algorithm. Over a tower ring every leading
/// coefficient inversion goes through the ring's invert, so zero divisors
/// surface as SplitRequest rather than wrong answers.
template <class R>
PolyOf<R> p_gcd_monic(const R& ring, PolyOf<R> a, PolyOf<R> b) {
    if (a.empty() && b.empty()) throw math_error("gcd of two zero polynomials");
    while (!b.empty()) {
        b = p_monic(ring, b);
        PolyOf<R> r = p_rem_monic(ring, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(ring, a);
}

/// Exact quotient; throws internal_error when the division leaves a
/// remainder. Divisor need not be monic (its lead must be invertible).
template <class R>
PolyOf<R> p_div_exact(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    if (b.empty()) throw math_error("polynomial division by zero");
    PolyOf<R> bm = p_monic(ring, b);
    PolyOf<R> q, r;
    p_divrem_monic(ring, a, bm, &q, &r);
    if (!r.empty()) throw internal_error("inexact polynomial division");
    auto inv = ring.invert(b.back());
    return p_scale(ring, q, inv);
}

/// Classic pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed
/// with ring operations only. Requires b nonzero and deg a >= deg b.
template <class R>
PolyOf<R> p_pseudo_rem(const R& ring, PolyOf<R> a, const PolyOf<R>& b) {
    if (b.empty()) throw math_error("pseudo-remainder by zero");
    const int db = p_deg<R>(b);
    int e = p_deg<R>(a) - db + 1;
    const auto& d = b.back();
    while (!a.empty() && p_deg<R>(a) >= db) {
        const int k = p_deg<R>(a) - db;
        auto s = a.back();
        a = p_scale(ring, a, d);
        PolyOf<R> sb(static_cast<std::size_t>(k), ring.zero());
        for (const auto& c : b) sb.push_back(ring.mul(c, s));
        a = p_sub(ring, a, sb);
        --e;
    }
    for (; e > 0; --e) a = p_scale(ring, a, d);
    return a;
}

/// Squarefree part p / gcd(p, p') made monic; same roots, all simple
/// (characteristic zero).
template <class R>
PolyOf<R> p_squarefree(const R& ring, const PolyOf<R>& a) {
    if (a.empty()) throw math_error("squarefree part of zero polynomial");
    if (p_deg<R>(a) == 0) return {ring.one()};
    PolyOf<R> g = p_gcd_monic(ring, a, p_derivative(ring, a));
    if (p_deg<R>(g) == 0) return p_monic(ring, a);
    PolyOf<R> q, r;
    p_divrem_monic(ring, a, g, &q, &r);
    if (!r.empty()) throw internal_error("gcd does not divide its argument");
    return p_monic(ring, q);
}

/// Inverse of A modulo a monic m via the extended Euclidean algorithm,
/// maintaining r == u*A (mod m). When gcd(A, m) is a proper divisor the ring
/// is asked to raise a split with the discovered factorization of m.
template <class R>
PolyOf<R> p_invert_mod(const R& ring, const PolyOf<R>& A, const PolyOf<R>& m) {
    if (A.empty()) throw math_error("inverting zero");
    PolyOf<R> r0 = m, r1 = A;
    PolyOf<R> u0, u1 = {ring.one()};
    while (!r1.empty()) {
        auto lcinv = ring.invert(r1.back());
        r1 = p_scale(ring, r1, lcinv);
        u1 = p_scale(ring, u1, lcinv);
        PolyOf<R> q, r2;
        p_divrem_monic(ring, r0, r1, &q, &r2);
        PolyOf<R> u2 = p_sub(ring, u0, p_mul(ring, q, u1));
        u2 = p_rem_monic(ring, u2, m);
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(r2);
        u1 = std::move(u2);
    }
    if (p_deg<R>(r0) == 0) return u0;  // r0 == 1: u0*A == 1 (mod m)
    // Proper gcd: m = r0 * (m/r0) is a coprime factorization (m squarefree).
    PolyOf<R> q, rem;
    p_divrem_monic(ring, m, r0, &q, &rem);
    if (!rem.empty()) throw internal_error("gcd does not divide the modulus");
    ring.raise_split(r0, q);
    throw internal_error("raise_split returned");  // unreachable
}

}  // namespace imult

#endif
