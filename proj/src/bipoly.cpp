#include "imult/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "imult/densepoly.hpp"

namespace imult {

namespace {

void check_same(const BiPoly& a, const BiPoly& b) {
    if (!a.context().compatible_with(b.context()))
        throw usage_error("bivariate polynomials from different contexts");
}

}  // namespace

BiPoly BiPoly::constant(const ExtensionContext& ctx, const Rational& r) {
    BiPoly p(ctx);
    if (!r.is_zero()) p.t_[{0, 0}] = tower::from_rational(r, ctx.size());
    return p;
}

BiPoly BiPoly::variable_x(const ExtensionContext& ctx) {
    BiPoly p(ctx);
    p.t_[{1, 0}] = tower::one(ctx.size());
    return p;
}

BiPoly BiPoly::variable_y(const ExtensionContext& ctx) {
    BiPoly p(ctx);
    p.t_[{0, 1}] = tower::one(ctx.size());
    return p;
}

BiPoly BiPoly::from_terms(const std::vector<std::tuple<int, int, Rational>>& terms) {
    BiPoly p(ExtensionContext::rationals());
    for (const auto& [i, j, c] : terms) p.add_term(i, j, tower::from_rational(c, 0));
    return p;
}

FieldElement BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    if (it == t_.end()) return FieldElement::from_rational(ctx_, Rational(0));
    return FieldElement(ctx_, it->second);
}

void BiPoly::set_coeff(int i, int j, const FieldElement& c) {
    if (!c.context().compatible_with(ctx_)) throw usage_error("coefficient context mismatch");
    if (c.is_zero())
        t_.erase({i, j});
    else
        t_[{i, j}] = c.val();
}

void BiPoly::add_term(int i, int j, const TowerVal& v) {
    if (v.is_zero()) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        t_.emplace(Key{i, j}, v);
        return;
    }
    it->second = tower::add(it->second, v, ctx_.size());
    if (it->second.is_zero()) t_.erase(it);
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(ctx_);
    for (const auto& [k, v] : t_) r.t_[k] = tower::neg(v, ctx_.size());
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    BiPoly r = a;
    for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    BiPoly r = a;
    for (const auto& [k, v] : b.t_)
        r.add_term(k.first, k.second, tower::neg(v, a.ctx_.size()));
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    BiPoly r(a.ctx_);
    const auto& data = a.ctx_.data();
    const std::size_t lvl = a.ctx_.size();
    for (const auto& [ka, va] : a.t_)
        for (const auto& [kb, vb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second,
                       tower::mul(va, vb, data, lvl));
    return r;
}

BiPoly BiPoly::scaled(const FieldElement& c) const {
    if (!c.context().compatible_with(ctx_)) throw usage_error("scalar context mismatch");
    BiPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_)
        r.add_term(k.first, k.second, tower::mul(v, c.val(), ctx_.data(), ctx_.size()));
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    return a.t_ == b.t_;
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
    if (!x.context().compatible_with(ctx_) || !y.context().compatible_with(ctx_))
        throw usage_error("eval context mismatch");
    // Horner in x over coefficients collected by x-degree.
    std::map<int, std::map<int, const TowerVal*>> by_x;
    for (const auto& [k, v] : t_) by_x[k.first][k.second] = &v;
    const auto& data = ctx_.data();
    const std::size_t lvl = ctx_.size();
    TowerVal acc = tower::zero(lvl);
    int prev_deg = -1;
    for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
        if (prev_deg >= 0)
            for (int e = 0; e < prev_deg - it->first; ++e)
                acc = tower::mul(acc, x.val(), data, lvl);
        TowerVal row = tower::zero(lvl);
        TowerVal ypow = tower::one(lvl);
        int last = 0;
        for (const auto& [j, v] : it->second) {
            for (int e = last; e < j; ++e) ypow = tower::mul(ypow, y.val(), data, lvl);
            last = j;
            row = tower::add(row, tower::mul(*v, ypow, data, lvl), lvl);
        }
        acc = tower::add(acc, row, lvl);
        prev_deg = it->first;
    }
    if (prev_deg > 0)
        for (int e = 0; e < prev_deg; ++e) acc = tower::mul(acc, x.val(), data, lvl);
    return FieldElement(ctx_, acc);
}

Rational BiPoly::eval_q(const Rational& x, const Rational& y) const {
    if (!ctx_.is_rationals()) throw usage_error("eval_q needs a polynomial over Q");
    Rational out;
    FieldElement v = eval(FieldElement::from_rational(ctx_, x),
                          FieldElement::from_rational(ctx_, y));
    v.as_rational(&out);
    return out;
}

BiPoly BiPoly::lifted_to(const ExtensionContext& bigger) const {
    // Validate the tower relation once via FieldElement.
    FieldElement::from_rational(ctx_, Rational(0)).lifted_to(bigger);
    BiPoly r(bigger);
    for (const auto& [k, v] : t_) r.t_[k] = tower::lift(v, ctx_.size(), bigger.size());
    return r;
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    // Graded-lex, highest first: readable and stable.
    std::vector<std::pair<Key, const TowerVal*>> ordered;
    ordered.reserve(t_.size());
    for (const auto& [k, v] : t_) ordered.emplace_back(k, &v);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, pv] : ordered) {
        std::string cs = tower::to_string(*pv, ctx_.data(), ctx_.size());
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            cs = cs.substr(1);
            neg = true;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars;
        if (k.first == 1) vars += "x";
        else if (k.first > 1) vars += "x^" + std::to_string(k.first);
        if (k.second >= 1) {
            if (!vars.empty()) vars += "*";
            vars += "y";
            if (k.second > 1) vars += "^" + std::to_string(k.second);
        }
        const bool compound = cs.find(' ') != std::string::npos;
        if (vars.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << vars;
        } else if (compound) {
            os << "(" << cs << ")*" << vars;
        } else {
            os << cs << "*" << vars;
        }
    }
    return os.str();
}

void BiPolyBuilder::add(int i, int j, const TowerVal& v) { p_.add_term(i, j, v); }

BiPoly BiPolyBuilder::take() { return std::move(p_); }

// --- structural operations --------------------------------------------------

LowestForm lowest_form(const BiPoly& f) {
    if (f.is_zero()) throw math_error("lowest form of the zero polynomial");
    int m = -1;
    for (const auto& [k, v] : f.terms()) {
        const int d = k.first + k.second;
        if (m < 0 || d < m) m = d;
    }
    BiPoly form(f.context());
    for (const auto& [k, v] : f.terms())
        if (k.first + k.second == m)
            form.set_coeff(k.first, k.second, FieldElement(f.context(), v));
    return LowestForm{m, std::move(form)};
}

StrictTransform chart1_strict_transform(const BiPoly& f) {
    if (f.is_zero()) throw math_error("strict transform of the zero polynomial");
    const int m = lowest_form(f).order;
    BiPolyBuilder b(f.context());
    for (const auto& [k, v] : f.terms()) b.add(k.first + k.second - m, k.second, v);
    return StrictTransform{m, b.take()};
}

StrictTransform chart2_strict_transform(const BiPoly& f) {
    if (f.is_zero()) throw math_error("strict transform of the zero polynomial");
    const int m = lowest_form(f).order;
    BiPolyBuilder b(f.context());
    for (const auto& [k, v] : f.terms()) b.add(k.first, k.first + k.second - m, v);
    return StrictTransform{m, b.take()};
}

BiPoly shift_y(const BiPoly& f, const FieldElement& r) {
    if (!r.context().compatible_with(f.context()))
        throw usage_error("shift scalar from a different context");
    if (r.is_zero()) return f;
    const auto& data = f.context().data();
    const std::size_t lvl = f.context().size();
    // Powers of r up to deg_y, then binomial expansion per term.
    const int dy = std::max(f.deg_y(), 0);
    std::vector<TowerVal> rpow(static_cast<std::size_t>(dy) + 1, tower::one(lvl));
    for (int e = 1; e <= dy; ++e)
        rpow[e] = tower::mul(rpow[e - 1], r.val(), data, lvl);
    BiPolyBuilder out(f.context());
    for (const auto& [k, v] : f.terms()) {
        const int j = k.second;
        Integer binom = 1;
        for (int s = 0; s <= j; ++s) {
            // C(j, s) * r^(j-s) * v contributes to y^s.
            TowerVal c = tower::mul(v, rpow[j - s], data, lvl);
            if (binom != 1)
                c = tower::mul(c, tower::from_rational(Rational(binom), lvl), data, lvl);
            out.add(k.first, s, c);
            binom = binom * (j - s) / (s + 1);
        }
    }
    return out.take();
}

namespace {

BiPoly swap_xy(const BiPoly& f) {
    BiPolyBuilder b(f.context());
    for (const auto& [k, v] : f.terms()) b.add(k.second, k.first, v);
    return b.take();
}

}  // namespace

BiPoly translate(const BiPoly& f, const FieldElement& px, const FieldElement& py) {
    return swap_xy(shift_y(swap_xy(shift_y(f, py)), px));
}

UniPoly eval_x0(const BiPoly& f) {
    const int dy = f.deg_y();
    TowerPoly c(static_cast<std::size_t>(std::max(dy, 0)) + 1,
                tower::zero(f.context().size()));
    for (const auto& [k, v] : f.terms())
        if (k.first == 0) c[k.second] = v;
    return UniPoly(f.context(), std::move(c));
}

BiPoly compose(const BiPoly& f, const BiPoly& u, const BiPoly& v) {
    check_same(u, v);
    if (!f.context().compatible_with(u.context()))
        throw usage_error("compose context mismatch");
    // Horner in x with precomputed powers of v.
    std::map<int, BiPoly> rows;  // x-degree -> sum over y of coeff * v^j
    const int dy = std::max(f.deg_y(), 0);
    std::vector<BiPoly> vpow;
    vpow.push_back(BiPoly::constant(u.context(), Rational(1)));
    for (int e = 1; e <= dy; ++e) vpow.push_back(vpow.back() * v);
    for (const auto& [k, w] : f.terms()) {
        BiPoly add = vpow[k.second].scaled(FieldElement(f.context(), w));
        auto it = rows.find(k.first);
        if (it == rows.end())
            rows.emplace(k.first, std::move(add));
        else
            it->second = it->second + add;
    }
    BiPoly acc = BiPoly::zero(u.context());
    int prev = -1;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (prev >= 0)
            for (int e = 0; e < prev - it->first; ++e) acc = acc * u;
        acc = acc + it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int e = 0; e < prev; ++e) acc = acc * u;
    return acc;
}

BiPoly project(const ContextSplit& split, const BiPoly& f, std::size_t branch) {
    if (!f.context().compatible_with(split.parent()))
        throw usage_error("projecting a polynomial from a different context");
    BiPoly r(split.branch(branch));
    for (const auto& [k, v] : f.t_) {
        TowerVal pv = split.project_val(v, branch);
        if (!pv.is_zero()) r.t_[k] = std::move(pv);
    }
    return r;
}

}  // namespace imult
