#include "imult/fulton.hpp"

#include <random>

#include "imult/errors.hpp"

namespace imult {

namespace {

/// f(x, 0) as a dense rational vector (index = x-degree).
std::vector<Rational> x_section(const BiPoly& f) {
    std::vector<Rational> a(static_cast<std::size_t>(std::max(f.deg_x(), 0)) + 1, Rational(0));
    bool any = false;
    for (const auto& [k, v] : f.terms()) {
        if (k.second != 0) continue;
        Rational c;
        tower::as_rational(v, &c);
        a[k.first] = c;
        any = true;
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (!any) a.clear();
    return a;
}

std::size_t ord_x(const std::vector<Rational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) return i;
    throw internal_error("ord_x of the zero section");
}

/// f / y, valid when f(x, 0) == 0.
BiPoly divide_out_y(const BiPoly& f) {
    BiPolyBuilder b(f.context());
    for (const auto& [k, v] : f.terms()) {
        if (k.second == 0) throw internal_error("y does not divide");
        b.add(k.first, k.second - 1, v);
    }
    return b.take();
}

/// g - c * x^k * f
BiPoly cancel_step(const BiPoly& g, const BiPoly& f, const Rational& c, int k) {
    BiPoly r = g;
    const FieldElement fc = FieldElement::from_rational(f.context(), -c);
    BiPolyBuilder shifted(f.context());
    for (const auto& [key, v] : f.terms()) shifted.add(key.first + k, key.second, v);
    return r + shifted.take().scaled(fc);
}

}  // namespace

FultonOutcome fulton_im(const BiPoly& f, const BiPoly& g, const RatPoint& P,
                        std::uint64_t step_budget) {
    if (!f.context().is_rationals() || !g.context().is_rationals())
        throw usage_error("fulton_im expects curves over Q");
    if (f.total_degree() < 1 || g.total_degree() < 1)
        throw math_error("not a curve: constant polynomial");

    const ExtensionContext& ctx = f.context();
    BiPoly a = translate(f, FieldElement::from_rational(ctx, P.x),
                         FieldElement::from_rational(ctx, P.y));
    BiPoly b = translate(g, FieldElement::from_rational(ctx, P.x),
                         FieldElement::from_rational(ctx, P.y));

    FultonOutcome out;
    std::uint64_t acc = 0;
    for (std::uint64_t step = 1;; ++step) {
        if (step > step_budget) {
            out.kind = FultonOutcome::Kind::Exhausted;
            out.steps = step - 1;
            return out;
        }
        if (!a.coeff(0, 0).is_zero() || !b.coeff(0, 0).is_zero()) {
            out.kind = FultonOutcome::Kind::Finite;
            out.value = acc;
            out.steps = step;
            return out;
        }
        std::vector<Rational> sa = x_section(a);
        std::vector<Rational> sb = x_section(b);
        if (sa.empty() && sb.empty()) {
            // Both divisible by y: a common component through the point.
            out.kind = FultonOutcome::Kind::Infinite;
            out.steps = step;
            return out;
        }
        if (sa.empty()) {
            acc += ord_x(sb);
            a = divide_out_y(a);
            continue;
        }
        if (sb.empty()) {
            acc += ord_x(sa);
            b = divide_out_y(b);
            continue;
        }
        if (sa.size() > sb.size()) {
            std::swap(a, b);
            std::swap(sa, sb);
        }
        const Rational c = sb.back() / sa.back();
        const int k = static_cast<int>(sb.size() - sa.size());
        b = cancel_step(b, a, c, k);
    }
}

bool common_component_through(const BiPoly& f, const BiPoly& g, const RatPoint& P) {
    if (f.total_degree() < 1 || g.total_degree() < 1)
        throw math_error("not a curve: constant polynomial");
    BiPoly h = bivar_gcd_q(f, g);
    return h.total_degree() >= 1 && h.eval_q(P.x, P.y).is_zero();
}

ResultantDiagnostic resultant_order_diagnostic(const BiPoly& f, const BiPoly& g) {
    if (f.deg_y() < 1 || g.deg_y() < 1)
        throw math_error("resultant diagnostic needs positive degree in y");
    ResultantDiagnostic diag;

    UniPoly res = resultant_y(f, g);
    if (res.is_zero()) return diag;  // common factor: not applicable

    std::size_t order = 0;
    while (order <= static_cast<std::size_t>(res.degree()) && res.coeff(order).is_zero())
        ++order;
    diag.order = order;

    // Leading y-coefficients must be nonzero constants.
    auto lead_const = [](const BiPoly& p) {
        const int dy = p.deg_y();
        for (const auto& [k, v] : p.terms())
            if (k.second == dy && k.first != 0) return false;
        return true;
    };
    if (!lead_const(f) || !lead_const(g)) return diag;

    // gcd(f(0,y), g(0,y)) must be y^k up to a unit.
    UniPoly u = uni_gcd(eval_x0(f), eval_x0(g));
    for (int i = 0; i < u.degree(); ++i)
        if (!u.coeff(i).is_zero()) return diag;

    diag.applicable = true;
    return diag;
}

BiPoly random_curve(const RandomCurveSpec& spec) {
    if (spec.degree < 1 || spec.multiplicity < 1 || spec.multiplicity > spec.degree ||
        spec.coefficient_bound < 1)
        throw usage_error("invalid random curve spec");
    std::mt19937_64 rng(spec.seed);
    // Hand-rolled bounded sampling keeps streams identical across platforms.
    const auto draw = [&rng](int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = (~std::uint64_t(0) / span) * span;
        std::uint64_t v;
        do {
            v = rng();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    };
    const ExtensionContext ctx = ExtensionContext::rationals();
    for (;;) {
        BiPoly p(ctx);
        bool low_nonzero = false, top_nonzero = false;
        for (int d = spec.multiplicity; d <= spec.degree; ++d) {
            for (int i = 0; i <= d; ++i) {
                const int c = draw(-spec.coefficient_bound, spec.coefficient_bound);
                if (c == 0) continue;
                p.set_coeff(i, d - i, FieldElement::from_rational(ctx, Rational(c)));
                if (d == spec.multiplicity) low_nonzero = true;
                if (d == spec.degree) top_nonzero = true;
            }
        }
        if (low_nonzero && top_nonzero) return p;
    }
}

}  // namespace imult
