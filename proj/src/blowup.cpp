#include "imult/blowup.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "imult/densepoly.hpp"
#include "imult/fulton.hpp"

namespace imult {

namespace {

/// Multiplicity at the origin with branch uniformity verified: over a tower
/// the quotient may be a product of fields, and the order is only trusted
/// once some coefficient of the candidate lowest form is certified a unit.
/// A zero-divisor coefficient means the branches disagree; the discovered
/// factorization is rethrown for the owner of that generator to handle.
int checked_multiplicity(const BiPoly& f) {
    LowestForm lf = lowest_form(f);
    if (f.context().is_rationals()) return lf.order;
    const auto& data = f.context().data();
    const std::size_t lvl = f.context().size();
    std::optional<SplitRequest> first;
    for (const auto& [k, v] : lf.form.terms()) {
        try {
            tower::invert(v, data, lvl);
            return lf.order;
        } catch (const SplitRequest& req) {
            if (!first) first = req;
        }
    }
    if (first) throw *first;
    return lf.order;  // all coefficients were units of the trivial kind
}

/// Does x divide the lowest form of f? Decided by the y^m coefficient:
/// zero representation means yes everywhere, a unit means no everywhere,
/// a zero divisor splits.
bool x_divides_lowest_checked(const BiPoly& f, int order) {
    FieldElement c = f.coeff(0, order);
    if (c.is_zero()) return true;
    if (f.context().is_rationals()) return false;
    tower::invert(c.val(), f.context().data(), f.context().size());  // may throw
    return false;
}

/// Perfect-square test for a canonical rational; writes the positive root.
bool rational_sqrt(const Rational& a, Rational* out) {
    if (a.sign() < 0) return false;
    if (a.is_zero()) {
        *out = Rational(0);
        return true;
    }
    if (!mpz_perfect_square_p(a.num().get_mpz_t()) ||
        !mpz_perfect_square_p(a.den().get_mpz_t()))
        return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), a.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), a.den().get_mpz_t());
    *out = Rational(sn, sd);
    return true;
}

/// All divisors of |n| if a bounded trial-division factorization succeeds.
bool small_divisors(const Integer& n, std::vector<Integer>* out) {
    constexpr unsigned long kTrialBound = 100000;
    constexpr std::size_t kMaxDivisors = 4096;
    Integer m = abs(n);
    if (m == 0) return false;
    std::vector<std::pair<Integer, int>> factors;
    for (unsigned long p = 2; Integer(p) * p <= m && p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        factors.emplace_back(Integer(p), e);
    }
    if (m > 1) {
        if (m > kTrialBound * (unsigned long)kTrialBound &&
            !mpz_probab_prime_p(m.get_mpz_t(), 30))
            return false;  // large composite cofactor: give up
        factors.emplace_back(m, 1);
    }
    out->assign(1, Integer(1));
    for (const auto& [p, e] : factors) {
        const std::size_t base = out->size();
        Integer pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out->push_back((*out)[j] * pe);
                if (out->size() > kMaxDivisors) return false;
            }
        }
    }
    return true;
}

/// Extracts rational roots of a monic squarefree h over Q, dividing each one
/// out; h is left as the (possibly trivial) rational-root-free cofactor.
/// Degree 2 is decided exactly through the discriminant; higher degrees use
/// rational root candidates when the bound coefficients factor cheaply, so
/// extraction is best-effort there (a missed root only coarsens the branch
/// grouping, it never changes the computed value).
std::vector<Rational> extract_rational_roots(UniPoly* h) {
    const ExtensionContext ctx = h->context();
    std::vector<Rational> roots;
    auto divide_out = [&](const Rational& r) {
        roots.push_back(r);
        UniPoly lin = UniPoly::from_rationals({-r, Rational(1)});
        UniPoly q, rem;
        divrem_monic(*h, lin, &q, &rem);
        if (!rem.is_zero()) throw internal_error("root does not divide");
        *h = q;
    };
    bool progress = true;
    while (progress && h->degree() >= 1) {
        progress = false;
        if (h->degree() == 1) {
            Rational c0;
            (-h->coeff(0)).as_rational(&c0);
            divide_out(c0);
            continue;
        }
        if (h->degree() == 2) {
            Rational c1, c0, s;
            h->coeff(1).as_rational(&c1);
            h->coeff(0).as_rational(&c0);
            if (rational_sqrt(c1 * c1 - Rational(4) * c0, &s)) {
                Rational half(Integer(1), Integer(2));
                divide_out((-c1 + s) * half);
                divide_out((-c1 - s) * half);
            }
            break;  // irreducible quadratic (or fully split above)
        }
        // Clear denominators and hunt candidates p/q, p | a0, q | lead.
        Integer lcm = 1;
        for (int i = 0; i <= h->degree(); ++i) {
            Rational c;
            h->coeff(i).as_rational(&c);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        }
        std::vector<Integer> ints(h->degree() + 1);
        for (int i = 0; i <= h->degree(); ++i) {
            Rational c;
            h->coeff(i).as_rational(&c);
            Rational scaled = c * Rational(lcm);
            ints[i] = scaled.num();
        }
        if (ints[0] == 0) {  // squarefree, so the root 0 is simple
            divide_out(Rational(0));
            progress = true;
            continue;
        }
        std::vector<Integer> ps, qs;
        if (!small_divisors(ints[0], &ps) || !small_divisors(ints.back(), &qs)) break;
        for (const Integer& p : ps) {
            for (const Integer& q : qs) {
                for (int s = 0; s < 2; ++s) {
                    Rational cand(s ? -p : p, q);
                    FieldElement v = h->eval(FieldElement::from_rational(ctx, cand));
                    if (v.is_zero()) {
                        divide_out(cand);
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

int multiplicity_origin(const BiPoly& f) {
    return lowest_form(f).order;
}

int multiplicity_at(const BiPoly& f, const RatPoint& p) {
    if (f.is_zero()) throw math_error("multiplicity of the zero polynomial");
    const ExtensionContext& ctx = f.context();
    BiPoly moved = translate(f, FieldElement::from_rational(ctx, p.x),
                             FieldElement::from_rational(ctx, p.y));
    return multiplicity_origin(moved);
}

std::vector<Direction> shared_directions(const BiPoly& f1, const BiPoly& g1,
                                         BlowupStats* stats) {
    if (!f1.context().compatible_with(g1.context()))
        throw usage_error("strict transforms from different contexts");
    const ExtensionContext& ctx = f1.context();
    UniPoly pf = eval_x0(f1), pg = eval_x0(g1);
    if (pf.is_zero() || pg.is_zero())
        throw internal_error("strict transform vanishes on the exceptional line");
    UniPoly h = squarefree_part(uni_gcd(pf, pg));
    std::vector<Direction> dirs;
    if (h.degree() < 1) return dirs;
    const std::size_t total = static_cast<std::size_t>(h.degree());

    if (ctx.is_rationals()) {
        for (const Rational& r : extract_rational_roots(&h))
            dirs.push_back({ctx, FieldElement::from_rational(ctx, r), 1, std::nullopt});
    }
    if (h.degree() == 1) {
        dirs.push_back({ctx, -h.coeff(0), 1, std::nullopt});
    } else if (h.degree() >= 2) {
        AdjoinResult adj = adjoin_root(ctx, h);
        if (stats) stats->extensions_created++;
        dirs.push_back({adj.ctx, adj.root, adj.relative_degree, h});
    }

    std::size_t sum = 0;
    for (const Direction& d : dirs) sum += d.conjugate_count;
    if (sum != total)
        throw internal_error("conjugate counts do not add up to the gcd degree");
    return dirs;
}

std::pair<std::uint64_t, ConfigNode> im_origin(const BiPoly& f, const BiPoly& g, int depth,
                                               int guard, BlowupStats* stats) {
    if (depth > guard) throw internal_error("blowup depth guard exceeded");
    if (f.is_zero() || g.is_zero()) throw math_error("blowup of the zero polynomial");
    stats->blowup_count++;
    stats->max_depth = std::max(stats->max_depth, depth);
    const ExtensionContext& ctx = f.context();

    const int mf = checked_multiplicity(f);
    const int mg = checked_multiplicity(g);
    if (mf == 0 || mg == 0)
        throw internal_error("blowup point does not lie on both curves");
    const bool vertical = x_divides_lowest_checked(f, mf) && x_divides_lowest_checked(g, mg);

    StrictTransform tf = chart1_strict_transform(f);
    StrictTransform tg = chart1_strict_transform(g);

    ConfigNode node;
    node.depth = depth;
    node.m_f = mf;
    node.m_g = mg;
    node.local_product = static_cast<std::uint64_t>(mf) * static_cast<std::uint64_t>(mg);
    std::uint64_t value = node.local_product;

    std::deque<Direction> work;
    for (Direction& d : shared_directions(tf.poly, tg.poly, stats)) work.push_back(std::move(d));

    while (!work.empty()) {
        Direction d = std::move(work.front());
        work.pop_front();
        try {
            BiPoly f2 = shift_y(tf.poly.lifted_to(d.ctx), d.root);
            BiPoly g2 = shift_y(tg.poly.lifted_to(d.ctx), d.root);
            auto [v, child] = im_origin(f2, g2, depth + 1, guard, stats);
            child.chart = 1;
            child.conjugate_count = d.conjugate_count;
            child.root = d.root;
            child.root_minpoly = d.minpoly;
            child.subtree_value = d.conjugate_count * v;
            value += child.subtree_value;
            node.children.push_back(std::move(child));
        } catch (const SplitRequest& req) {
            if (req.level < ctx.size()) throw;  // an ancestor owns that generator
            if (req.level != ctx.size())
                throw internal_error("split of a generator above the active tower");
            // The generator adjoined for this direction factors: refine into
            // one branch per cofactor and redo. Conjugate counts stay exact:
            // the cofactor degrees sum to the degree of the old modulus.
            ContextSplit split(d.ctx, req);
            for (std::size_t b = 0; b < split.count(); ++b) {
                Direction nd;
                nd.ctx = split.branch(b);
                nd.root = split.project(d.root, b);
                nd.conjugate_count = split.factor_degree(b);
                if (split.factor_degree(b) >= 2)
                    nd.minpoly = UniPoly(ctx, req.factors[b]);
                work.push_back(std::move(nd));
            }
        }
    }

    if (vertical) {
        StrictTransform t2f = chart2_strict_transform(f);
        StrictTransform t2g = chart2_strict_transform(g);
        auto [v, child] = im_origin(t2f.poly, t2g.poly, depth + 1, guard, stats);
        child.chart = 2;
        child.conjugate_count = 1;
        child.root = FieldElement::from_rational(ctx, Rational(0));
        child.subtree_value = v;
        value += v;
        node.children.push_back(std::move(child));
    }

    node.subtree_value = value;
    return {value, node};
}

IMReport intersection_multiplicity(const BiPoly& f, const BiPoly& g, const RatPoint& P) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!f.context().is_rationals() || !g.context().is_rationals())
        throw usage_error("intersection_multiplicity expects curves over Q");
    if (f.total_degree() < 1 || g.total_degree() < 1)
        throw math_error("not a curve: constant polynomial");

    IMReport report;
    auto finish = [&]() {
        report.stats.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count();
        return report;
    };

    if (common_component_through(f, g, P)) {
        report.value = IMValue::inf();
        return finish();
    }
    if (f.eval_q(P.x, P.y) != Rational(0) || g.eval_q(P.x, P.y) != Rational(0)) {
        report.value = IMValue::finite(0);
        return finish();
    }

    const ExtensionContext& ctx = f.context();
    BiPoly fl = translate(f, FieldElement::from_rational(ctx, P.x),
                          FieldElement::from_rational(ctx, P.y));
    BiPoly gl = translate(g, FieldElement::from_rational(ctx, P.x),
                          FieldElement::from_rational(ctx, P.y));
    const int guard = f.total_degree() * g.total_degree() + 1;
    auto [v, node] = im_origin(fl, gl, 0, guard, &report.stats);
    report.value = IMValue::finite(v);
    report.tree = std::move(node);
    return finish();
}

}  // namespace imult
