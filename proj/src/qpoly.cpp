// Operations specific to polynomials over Q: bivariate gcd by primitive PRS
// over Q[x][y], and the Sylvester resultant via fraction-free elimination.
// Both are only ever needed over the base field (the common-component check
// runs once at the top level; the resultant is a diagnostic).

#include <algorithm>
#include <vector>

#include "imult/bipoly.hpp"
#include "imult/densepoly.hpp"

namespace imult {

namespace {

struct RationalRing {
    using value_type = Rational;
    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_long(long n) const { return Rational(n); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type invert(const value_type& a) const { return a.inverse(); }
};

using QPoly = std::vector<Rational>;  // dense in x over Q

const RationalRing kQ{};

/// Ring Q[x] as coefficients for polynomials in y.
struct QPolyRing {
    using value_type = QPoly;
    value_type zero() const { return {}; }
    value_type one() const { return {Rational(1)}; }
    value_type from_long(long n) const {
        if (n == 0) return {};
        return {Rational(n)};
    }
    bool is_zero(const value_type& a) const { return a.empty(); }
    value_type add(const value_type& a, const value_type& b) const { return p_add(kQ, a, b); }
    value_type sub(const value_type& a, const value_type& b) const { return p_sub(kQ, a, b); }
    value_type neg(const value_type& a) const { return p_neg(kQ, a); }
    value_type mul(const value_type& a, const value_type& b) const { return p_mul(kQ, a, b); }
};

const QPolyRing kQx{};

using YPoly = std::vector<QPoly>;  // dense in y with Q[x] coefficients

Rational coeff_to_rational(const TowerVal& v) {
    Rational r;
    if (!tower::as_rational(v, &r))
        throw usage_error("operation requires a polynomial over Q");
    return r;
}

// --- integer-primitive univariate gcd ---------------------------------------
// Monic Euclid over Q suffers catastrophic rational growth on big inputs; the
// contents of a primitive PRS are exactly where that bites. This variant
// clears denominators once and runs a pseudo-remainder sequence over Z with
// integer content stripping, so coefficients stay subresultant-sized.

using ZPoly = std::vector<Integer>;

ZPoly to_primitive_z(const QPoly& a) {
    Integer lcm = 1;
    for (const Rational& c : a)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(a.size());
    Integer content = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational scaled = a[i] * Rational(lcm);
        z[i] = scaled.num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content > 1)
        for (Integer& c : z) c /= content;
    return z;
}

void z_strip_content(ZPoly& a) {
    Integer content = 0;
    for (const Integer& c : a)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Integer& c : a) c /= content;
}

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// A nonzero integer multiple of (a mod b), built by cross-multiplied
/// cancellation steps; callers strip content right after, so the exact
/// lc(b)-power scaling of the classic prem is irrelevant here.
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    while (a.size() >= b.size()) {
        const std::size_t k = a.size() - b.size();
        const Integer s = a.back();
        const Integer lb = b.back();
        for (Integer& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= s * b[i];
        z_trim(a);
        if (a.empty()) break;
    }
    return a;
}

/// Monic gcd of rational polynomials via an integer primitive PRS.
QPoly q_gcd_fast(const QPoly& pa, const QPoly& pb) {
    if (pa.empty() && pb.empty()) throw math_error("gcd of two zero polynomials");
    if (pa.empty()) return p_monic(kQ, pb);
    if (pb.empty()) return p_monic(kQ, pa);
    ZPoly a = to_primitive_z(pa), b = to_primitive_z(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        ZPoly r = z_prem(a, b);
        if (r.empty()) {
            a = std::move(b);
            QPoly out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(a[i]);
            return p_monic(kQ, out);
        }
        z_strip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    return {Rational(1)};  // last nonzero remainder is a constant
}

YPoly to_ypoly(const BiPoly& f) {
    YPoly y(static_cast<std::size_t>(std::max(f.deg_y(), 0)) + 1);
    for (const auto& [k, v] : f.terms()) {
        QPoly& row = y[k.second];
        if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1, Rational(0));
        row[k.first] = coeff_to_rational(v);
    }
    while (!y.empty() && y.back().empty()) y.pop_back();
    return y;
}

BiPoly from_ypoly(const YPoly& y) {
    BiPoly f(ExtensionContext::rationals());
    for (std::size_t j = 0; j < y.size(); ++j)
        for (std::size_t i = 0; i < y[j].size(); ++i)
            if (!y[j][i].is_zero())
                f.set_coeff(static_cast<int>(i), static_cast<int>(j),
                            FieldElement::from_rational(f.context(), y[j][i]));
    return f;
}

/// Monic gcd in Q[x] of all coefficients.
QPoly ypoly_content(const YPoly& f) {
    QPoly c;
    for (const QPoly& row : f) {
        if (row.empty()) continue;
        c = c.empty() ? p_monic(kQ, row) : q_gcd_fast(c, row);
        if (p_deg<RationalRing>(c) == 0) return {Rational(1)};
    }
    return c;
}

YPoly ypoly_primitive(const YPoly& f, const QPoly& content) {
    YPoly r = f;
    for (QPoly& row : r)
        if (!row.empty()) row = p_div_exact(kQ, row, content);
    return r;
}

/// Integer-primitive scaling with positive leading coefficient in graded-lex.
BiPoly normalize_q(const BiPoly& f) {
    if (f.is_zero()) return f;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [k, v] : f.terms()) {
        Rational c = coeff_to_rational(v);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    // Sign from the graded-lex leading term.
    BiPoly::Key lead{-1, -1};
    Rational lead_c;
    for (const auto& [k, v] : f.terms()) {
        const int d = k.first + k.second;
        const int dl = lead.first + lead.second;
        if (d > dl || (d == dl && k > lead)) {
            lead = k;
            lead_c = coeff_to_rational(v);
        }
    }
    if ((lead_c * scale).sign() < 0) scale = -scale;
    return f.scaled(FieldElement::from_rational(f.context(), scale));
}

// --- modular triviality certificate ------------------------------------------
// gcd computations over Z_p are orders of magnitude cheaper than exact ones.
// If p preserves the graded-lex leading coefficients of the integer-cleared
// inputs, any nonconstant common divisor over Q survives reduction mod p, so
// a constant gcd mod p certifies a constant gcd over Q. A nonconstant modular
// gcd proves nothing (unlucky primes exist) and the caller falls back.

namespace {

using ZpPoly = std::vector<std::uint64_t>;  // dense in x over Z_p

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        // reduce a mod b (b made effectively monic through its lc inverse)
        const std::uint64_t inv = powp(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const std::uint64_t c = mulp(a.back(), inv, p);
            const std::size_t k = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = mulp(c, b[i], p);
                a[k + i] = (a[k + i] + p - t) % p;
            }
            zp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

/// Exact division in Z_p[x]; the divisor is known to divide.
ZpPoly zp_div(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    ZpPoly r = a, q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t inv = powp(b.back(), p - 2, p);
    while (r.size() >= b.size()) {
        const std::uint64_t c = mulp(r.back(), inv, p);
        const std::size_t k = r.size() - b.size();
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = mulp(c, b[i], p);
            r[k + i] = (r[k + i] + p - t) % p;
        }
        zp_trim(r);
        if (r.empty()) break;
    }
    return q;
}

using ZpYPoly = std::vector<ZpPoly>;  // dense in y

void zpy_trim(ZpYPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

ZpPoly zpy_content(const ZpYPoly& f, std::uint64_t p) {
    ZpPoly c;
    for (const ZpPoly& row : f) {
        if (row.empty()) continue;
        c = c.empty() ? row : zp_gcd(c, row, p);
        if (c.size() == 1) return c;
    }
    return c;
}

ZpYPoly zpy_primitive(const ZpYPoly& f, const ZpPoly& content, std::uint64_t p) {
    if (content.size() == 1) {
        ZpYPoly r = f;
        return r;
    }
    ZpYPoly r(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        if (!f[j].empty()) r[j] = zp_div(f[j], content, p);
    return r;
}

ZpYPoly zpy_prem(ZpYPoly a, const ZpYPoly& b, std::uint64_t p) {
    while (a.size() >= b.size()) {
        const ZpPoly s = a.back();
        const ZpPoly lb = b.back();
        const std::size_t k = a.size() - b.size();
        for (ZpPoly& row : a) {
            if (row.empty()) continue;
            ZpPoly scaled(row.size() + lb.size() - 1, 0);
            for (std::size_t i = 0; i < row.size(); ++i)
                for (std::size_t j = 0; j < lb.size(); ++j)
                    scaled[i + j] = (scaled[i + j] + mulp(row[i], lb[j], p)) % p;
            zp_trim(scaled);
            row = std::move(scaled);
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            ZpPoly sub(s.size() + b[j].size() - 1, 0);
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t l = 0; l < b[j].size(); ++l)
                    sub[i + l] = (sub[i + l] + mulp(s[i], b[j][l], p)) % p;
            ZpPoly& row = a[k + j];
            if (row.size() < sub.size()) row.resize(sub.size(), 0);
            for (std::size_t i = 0; i < sub.size(); ++i)
                row[i] = (row[i] + p - sub[i]) % p;
            zp_trim(row);
        }
        zpy_trim(a);
        if (a.empty()) break;
    }
    return a;
}

struct ZTerms {
    std::vector<std::tuple<int, int, Integer>> terms;
    int lead_i = -1, lead_j = -1;  // graded-lex leading exponents
    Integer lead_c;
};

ZTerms clear_denominators(const BiPoly& f) {
    Integer lcm = 1;
    for (const auto& [k, v] : f.terms()) {
        Rational c = coeff_to_rational(v);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    ZTerms out;
    for (const auto& [k, v] : f.terms()) {
        Rational c = coeff_to_rational(v) * Rational(lcm);
        out.terms.emplace_back(k.first, k.second, c.num());
        const int d = k.first + k.second, dl = out.lead_i + out.lead_j;
        if (d > dl || (d == dl && k > std::make_pair(out.lead_i, out.lead_j))) {
            out.lead_i = k.first;
            out.lead_j = k.second;
            out.lead_c = c.num();
        }
    }
    return out;
}

/// Builds f mod p as a y-major dense array; false when p kills the
/// graded-lex leading coefficient (bad prime for this input).
bool reduce_mod_p(const ZTerms& f, std::uint64_t p, ZpYPoly* out) {
    if (mpz_fdiv_ui(f.lead_c.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    int dy = 0;
    for (const auto& [i, j, c] : f.terms) dy = std::max(dy, j);
    out->assign(dy + 1, ZpPoly{});
    for (const auto& [i, j, c] : f.terms) {
        // mpz_fdiv_ui returns the non-negative remainder for negative inputs.
        std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
        ZpPoly& row = (*out)[j];
        if (static_cast<int>(row.size()) <= i) row.resize(i + 1, 0);
        row[i] = r;
    }
    for (ZpPoly& row : *out) zp_trim(row);
    zpy_trim(*out);
    return !out->empty();
}

/// gcd(f mod p, g mod p) constant?
bool gcd_constant_mod_p(const ZTerms& zf, const ZTerms& zg, std::uint64_t p) {
    ZpYPoly a, b;
    if (!reduce_mod_p(zf, p, &a) || !reduce_mod_p(zg, p, &b)) return false;
    ZpPoly ca = zpy_content(a, p), cb = zpy_content(b, p);
    if (zp_gcd(ca, cb, p).size() != 1) return false;
    a = zpy_primitive(a, ca, p);
    b = zpy_primitive(b, cb, p);
    if (a.size() < b.size()) std::swap(a, b);
    if (b.size() == 1) return true;  // primitive and y-free: coprime to pp(a)
    while (true) {
        ZpYPoly r = zpy_prem(a, b, p);
        if (r.empty()) return b.size() == 1;
        if (r.size() == 1) return true;  // nonzero constant in y
        ZpPoly cr = zpy_content(r, p);
        a = std::move(b);
        b = zpy_primitive(r, cr, p);
    }
}

}  // namespace

bool bivar_gcd_known_trivial(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) return false;
    if (!f.context().is_rationals() || !g.context().is_rationals())
        throw usage_error("bivar_gcd_known_trivial requires polynomials over Q");
    static const std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                            2147483579ULL, 2147483563ULL};
    ZTerms zf = clear_denominators(f), zg = clear_denominators(g);
    int tried = 0;
    for (std::uint64_t p : kPrimes) {
        if (tried == 3) break;
        ++tried;
        if (gcd_constant_mod_p(zf, zg, p)) return true;
    }
    return false;
}

BiPoly bivar_gcd_q(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw math_error("bivariate gcd of zero polynomial");
    if (!f.context().is_rationals() || !g.context().is_rationals())
        throw usage_error("bivar_gcd_q requires polynomials over Q");
    YPoly yf = to_ypoly(f), yg = to_ypoly(g);
    const int df = p_deg<QPolyRing>(yf), dg = p_deg<QPolyRing>(yg);

    // A polynomial of y-degree 0 contributes only its x-part.
    if (df == 0 || dg == 0) {
        QPoly a = df == 0 ? yf[0] : ypoly_content(yf);
        QPoly b = dg == 0 ? yg[0] : ypoly_content(yg);
        QPoly d = q_gcd_fast(a, b);
        return normalize_q(from_ypoly(YPoly{d}));
    }

    QPoly cf = ypoly_content(yf), cg = ypoly_content(yg);
    QPoly cont_gcd = q_gcd_fast(cf, cg);
    YPoly a = ypoly_primitive(yf, cf);
    YPoly b = ypoly_primitive(yg, cg);
    if (p_deg<QPolyRing>(a) < p_deg<QPolyRing>(b)) std::swap(a, b);

    // Primitive PRS in y.
    YPoly pp_gcd;
    while (true) {
        YPoly r = p_pseudo_rem(kQx, a, b);
        if (r.empty()) {
            pp_gcd = ypoly_primitive(b, ypoly_content(b));
            break;
        }
        if (p_deg<QPolyRing>(r) == 0) {
            pp_gcd = YPoly{QPoly{Rational(1)}};
            break;
        }
        a = std::move(b);
        b = ypoly_primitive(r, ypoly_content(r));
    }

    YPoly result(pp_gcd.size());
    for (std::size_t j = 0; j < pp_gcd.size(); ++j)
        if (!pp_gcd[j].empty()) result[j] = p_mul(kQ, pp_gcd[j], cont_gcd);
    return normalize_q(from_ypoly(result));
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    if (!f.context().is_rationals() || !g.context().is_rationals())
        throw usage_error("resultant_y requires polynomials over Q");
    YPoly yf = to_ypoly(f), yg = to_ypoly(g);
    const int m = p_deg<QPolyRing>(yf), n = p_deg<QPolyRing>(yg);
    if (m < 1 || n < 1) throw math_error("resultant needs positive degree in y");

    // Sylvester matrix, then fraction-free (Bareiss) elimination; entries
    // stay in Q[x] because every division is by a previous pivot.
    const std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<QPoly>> M(N, std::vector<QPoly>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = yf[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = yg[n - j];

    int sign = 1;
    QPoly prev = {Rational(1)};
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].empty()) {
            std::size_t r = k + 1;
            while (r < N && M[r][k].empty()) ++r;
            if (r == N) return UniPoly::zero(f.context());  // singular: resultant 0
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                QPoly t = p_sub(kQ, p_mul(kQ, M[k][k], M[i][j]), p_mul(kQ, M[i][k], M[k][j]));
                M[i][j] = t.empty() ? QPoly{} : p_div_exact(kQ, t, prev);
            }
            M[i][k].clear();
        }
        prev = M[k][k];
    }
    QPoly det = M[N - 1][N - 1];
    if (sign < 0) det = p_neg(kQ, det);
    TowerPoly c;
    c.reserve(det.size());
    for (const Rational& r : det) c.push_back(tower::from_rational(r, 0));
    return UniPoly(ExtensionContext::rationals(), std::move(c));
}

}  // namespace imult
