#include "imult/harness.hpp"

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstring>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace imult {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = (~std::uint64_t(0) / span) * span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
}

std::int64_t now_micros() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

IsolatedOutcome run_isolated(const std::function<std::string()>& work,
                             std::int64_t timeout_ms) {
    int fds[2];
    if (pipe(fds) != 0) throw internal_error("pipe failed");
    const std::int64_t t0 = now_micros();
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        throw internal_error("fork failed");
    }
    if (pid == 0) {
        close(fds[0]);
        std::string payload;
        try {
            payload = work();
        } catch (const std::exception& e) {
            payload = std::string("E ") + e.what();
        } catch (...) {
            payload = "E unknown";
        }
        const char* p = payload.c_str();
        std::size_t left = payload.size();
        while (left > 0) {
            const ssize_t n = write(fds[1], p, left);
            if (n <= 0) break;
            p += n;
            left -= static_cast<std::size_t>(n);
        }
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);

    IsolatedOutcome out;
    std::string buf;
    char chunk[4096];
    bool deadline_hit = false;
    for (;;) {
        const std::int64_t elapsed_ms = (now_micros() - t0) / 1000;
        const std::int64_t left_ms = timeout_ms - elapsed_ms;
        if (left_ms <= 0) {
            deadline_hit = true;
            break;
        }
        struct pollfd pfd{fds[0], POLLIN, 0};
        const int pr = poll(&pfd, 1, static_cast<int>(std::min<std::int64_t>(left_ms, 200)));
        if (pr < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (pr == 0) continue;
        const ssize_t n = read(fds[0], chunk, sizeof chunk);
        if (n < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (n == 0) break;  // child closed the pipe
        buf.append(chunk, static_cast<std::size_t>(n));
    }
    close(fds[0]);
    if (deadline_hit) {
        kill(pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        out.finished = false;
        out.micros = (now_micros() - t0);
        return out;
    }
    int status = 0;
    waitpid(pid, &status, 0);
    out.finished = WIFEXITED(status) && WEXITSTATUS(status) == 0 && !buf.empty();
    out.micros = now_micros() - t0;
    out.payload = std::move(buf);
    return out;
}

TrialPair make_trial_pair(std::uint64_t base_seed, int trial, int max_deg, int max_mult,
                          int bound) {
    std::mt19937_64 rng(splitmix(base_seed ^ (0x51edULL + static_cast<std::uint64_t>(trial))));
    TrialPair p;
    const int df = draw_int(rng, 1, max_deg);
    const int dg = draw_int(rng, 1, max_deg);
    p.spec_f = {df, draw_int(rng, 1, std::min(df, max_mult)), bound, rng()};
    p.spec_g = {dg, draw_int(rng, 1, std::min(dg, max_mult)), bound, rng()};
    p.f = random_curve(p.spec_f);
    p.g = random_curve(p.spec_g);
    return p;
}

bool VerifyResult::ok() const {
    if (disagreements != 0 || !depth_bound_ok) return false;
    for (const PropertyStat& p : properties)
        if (p.fail != 0) return false;
    return true;
}

namespace {

const RatPoint kOrigin{Rational(0), Rational(0)};

std::string render_valueish(const IMValue& v) {
    return v.infinite ? "infinity" : std::to_string(v.value);
}

std::string fulton_payload(const BiPoly& f, const BiPoly& g) {
    const std::int64_t t0 = now_micros();
    FultonOutcome o = fulton_im(f, g, kOrigin, ~std::uint64_t(0));
    const std::int64_t us = now_micros() - t0;
    std::ostringstream os;
    switch (o.kind) {
        case FultonOutcome::Kind::Finite:
            os << "F " << o.value << " " << us;
            break;
        case FultonOutcome::Kind::Infinite:
            os << "I " << us;
            break;
        case FultonOutcome::Kind::Exhausted:
            os << "X " << us;
            break;
    }
    return os.str();
}

std::string blowup_payload(const BiPoly& f, const BiPoly& g) {
    IMReport r = intersection_multiplicity(f, g, kOrigin);
    std::ostringstream os;
    if (r.value.infinite)
        os << "I " << r.stats.elapsed_micros;
    else
        os << "F " << r.value.value << " " << r.stats.elapsed_micros;
    return os.str();
}

struct ParsedPayload {
    char tag = '?';
    std::uint64_t value = 0;
    std::int64_t micros = 0;
    std::string error;
};

ParsedPayload parse_payload(const std::string& s) {
    ParsedPayload p;
    if (s.empty()) return p;
    p.tag = s[0];
    std::istringstream is(s.substr(1));
    if (p.tag == 'F') is >> p.value >> p.micros;
    else if (p.tag == 'I' || p.tag == 'X') is >> p.micros;
    else p.error = s;
    return p;
}

/// Curves through the origin with no common component through it.
TrialPair clean_pair(std::uint64_t seed, int trial, int max_deg, int max_mult, int bound,
                     int* skipped = nullptr) {
    for (int attempt = 0;; ++attempt) {
        TrialPair p = make_trial_pair(seed + static_cast<std::uint64_t>(attempt) * 0x1000000,
                                      trial, max_deg, max_mult, bound);
        if (!common_component_through(p.f, p.g, kOrigin)) return p;
        if (skipped) ++*skipped;
    }
}

bool check_depth(const IMReport& r, const BiPoly& f, const BiPoly& g) {
    return r.stats.max_depth <= f.total_degree() * g.total_degree();
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opt, std::ostream* log) {
    VerifyResult res;
    for (int t = 0; t < opt.trials; ++t) {
        TrialPair p = make_trial_pair(opt.seed, t, opt.max_deg, opt.max_mult, opt.bound);
        res.trials++;
        if (common_component_through(p.f, p.g, kOrigin)) {
            res.infinite_skipped++;
            continue;
        }
        IMReport blow = intersection_multiplicity(p.f, p.g, kOrigin);
        res.max_depth_seen = std::max(res.max_depth_seen, blow.stats.max_depth);
        if (!check_depth(blow, p.f, p.g)) res.depth_bound_ok = false;

        IsolatedOutcome iso = run_isolated([&] { return fulton_payload(p.f, p.g); },
                                           opt.timeout_ms);
        if (!iso.finished) {
            res.oracle_dnf++;
            continue;
        }
        ParsedPayload oracle = parse_payload(iso.payload);
        if (oracle.tag == 'X') {
            res.oracle_dnf++;
            continue;
        }
        const bool agree = (oracle.tag == 'F' && !blow.value.infinite &&
                            oracle.value == blow.value.value) ||
                           (oracle.tag == 'I' && blow.value.infinite);
        if (agree) {
            res.agreements++;
        } else {
            res.disagreements++;
            if (res.first_disagreement.empty()) {
                std::ostringstream os;
                os << "trial " << t << ": blowup " << render_valueish(blow.value)
                   << " vs oracle " << iso.payload << " (f seed " << p.spec_f.seed
                   << ", g seed " << p.spec_g.seed << ")";
                res.first_disagreement = os.str();
            }
        }
        if (log && (t + 1) % 50 == 0)
            *log << "  verified " << (t + 1) << "/" << opt.trials << " trials\n";
    }

    if (opt.run_properties) {
        res.properties.push_back(
            prop_symmetry(opt.prop_trials, opt.seed + 101, opt.max_deg, opt.max_mult, opt.bound));
        res.properties.push_back(
            prop_zero_law(opt.prop_trials, opt.seed + 202, opt.max_deg, opt.max_mult, opt.bound));
        res.properties.push_back(prop_lower_bound(opt.prop_trials, opt.seed + 303, opt.max_deg,
                                                  opt.max_mult, opt.bound));
        res.properties.push_back(prop_affine_invariance(opt.prop_trials, opt.seed + 404,
                                                        std::min(opt.max_deg, 4), 2,
                                                        std::min(opt.bound, 5)));
        res.properties.push_back(prop_product_additivity(opt.prop_trials, opt.seed + 505,
                                                         std::min(opt.max_deg, 3),
                                                         std::min(opt.bound, 5)));
        res.properties.push_back(prop_combination_invariance(opt.prop_trials, opt.seed + 606,
                                                             std::min(opt.max_deg, 4),
                                                             opt.max_mult,
                                                             std::min(opt.bound, 5)));
    }
    return res;
}

PropertyStat prop_symmetry(int n, std::uint64_t seed, int max_deg, int max_mult, int bound) {
    PropertyStat st{"symmetry"};
    for (int t = 0; t < n; ++t) {
        TrialPair p = make_trial_pair(seed, t, max_deg, max_mult, bound);
        IMReport a = intersection_multiplicity(p.f, p.g, kOrigin);
        IMReport b = intersection_multiplicity(p.g, p.f, kOrigin);
        if (a.value == b.value) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty())
                st.first_failure = "trial " + std::to_string(t) + ": " +
                                   render_valueish(a.value) + " vs " + render_valueish(b.value);
        }
    }
    return st;
}

PropertyStat prop_zero_law(int n, std::uint64_t seed, int max_deg, int max_mult, int bound) {
    PropertyStat st{"zero-law"};
    std::mt19937_64 rng(splitmix(seed));
    for (int t = 0; t < n; ++t) {
        TrialPair p = make_trial_pair(seed, t, max_deg, max_mult, bound);
        const RatPoint P{Rational(draw_int(rng, -2, 2)), Rational(draw_int(rng, -2, 2))};
        if (common_component_through(p.f, p.g, P)) {
            st.pass++;  // value infinite and P on both: the law holds vacuously
            continue;
        }
        IMReport r = intersection_multiplicity(p.f, p.g, P);
        const bool off_curve =
            !p.f.eval_q(P.x, P.y).is_zero() || !p.g.eval_q(P.x, P.y).is_zero();
        const bool is_zero = !r.value.infinite && r.value.value == 0;
        if (is_zero == off_curve) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty())
                st.first_failure = "trial " + std::to_string(t);
        }
    }
    return st;
}

PropertyStat prop_lower_bound(int n, std::uint64_t seed, int max_deg, int max_mult, int bound) {
    PropertyStat st{"lower-bound"};
    for (int t = 0; t < n; ++t) {
        int skipped = 0;
        TrialPair p = clean_pair(seed, t, max_deg, max_mult, bound, &skipped);
        IMReport r = intersection_multiplicity(p.f, p.g, kOrigin);
        const std::uint64_t mm =
            static_cast<std::uint64_t>(multiplicity_at(p.f, kOrigin)) *
            static_cast<std::uint64_t>(multiplicity_at(p.g, kOrigin));
        bool good = !r.value.infinite && r.value.value >= mm;
        if (good && r.tree) {
            // Equality exactly when the configuration stops at the root.
            const bool transversal = r.tree->children.empty();
            good = (r.value.value == mm) == transversal;
        }
        if (good) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty()) st.first_failure = "trial " + std::to_string(t);
        }
    }
    return st;
}

namespace {

/// Random invertible affine map with entries in [-bound, bound]; applies the
/// inverse to curves (f -> f of the inverse map) and the map to points.
struct AffineMap {
    Rational a, b, c, d, e, f;  // (x,y) -> (a x + b y + e, c x + d y + f)

    RatPoint apply(const RatPoint& p) const {
        return {a * p.x + b * p.y + e, c * p.x + d * p.y + f};
    }

    BiPoly transform_curve(const BiPoly& poly) const {
        // Substitute the inverse map into the polynomial.
        const Rational det = a * d - b * c;
        const Rational ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
        const Rational ie = -(ia * e + ib * f), iff = -(ic * e + id * f);
        const ExtensionContext ctx = poly.context();
        BiPoly X = BiPoly::variable_x(ctx), Y = BiPoly::variable_y(ctx);
        auto lin = [&](const Rational& px, const Rational& py, const Rational& pc) {
            return X.scaled(FieldElement::from_rational(ctx, px)) +
                   Y.scaled(FieldElement::from_rational(ctx, py)) +
                   BiPoly::constant(ctx, pc);
        };
        return compose(poly, lin(ia, ib, ie), lin(ic, id, iff));
    }
};

AffineMap random_affine(std::mt19937_64& rng, int bound) {
    for (;;) {
        AffineMap m{Rational(draw_int(rng, -bound, bound)), Rational(draw_int(rng, -bound, bound)),
                    Rational(draw_int(rng, -bound, bound)), Rational(draw_int(rng, -bound, bound)),
                    Rational(draw_int(rng, -bound, bound)), Rational(draw_int(rng, -bound, bound))};
        if (!(m.a * m.d - m.b * m.c).is_zero()) return m;
    }
}

}  // namespace

PropertyStat prop_affine_invariance(int n, std::uint64_t seed, int max_deg, int max_mult,
                                    int bound) {
    PropertyStat st{"affine-invariance"};
    std::mt19937_64 rng(splitmix(seed ^ 0xaffe));
    for (int t = 0; t < n; ++t) {
        TrialPair p = clean_pair(seed, t, max_deg, max_mult, bound);
        AffineMap phi = random_affine(rng, 3);
        IMReport base = intersection_multiplicity(p.f, p.g, kOrigin);
        IMReport moved = intersection_multiplicity(phi.transform_curve(p.f),
                                                   phi.transform_curve(p.g), phi.apply(kOrigin));
        if (base.value == moved.value) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty())
                st.first_failure = "trial " + std::to_string(t) + ": " +
                                   render_valueish(base.value) + " vs " +
                                   render_valueish(moved.value);
        }
    }
    return st;
}

PropertyStat prop_product_additivity(int n, std::uint64_t seed, int max_deg, int bound) {
    PropertyStat st{"product-additivity"};
    for (int t = 0; t < n; ++t) {
        std::mt19937_64 rng(splitmix(seed + static_cast<std::uint64_t>(t)));
        RandomCurveSpec su{draw_int(rng, 1, max_deg), 1, bound, rng()};
        RandomCurveSpec sv{draw_int(rng, 1, max_deg), 1, bound, rng()};
        RandomCurveSpec sg{draw_int(rng, 1, max_deg), 1, bound, rng()};
        su.multiplicity = draw_int(rng, 1, su.degree);
        sv.multiplicity = draw_int(rng, 1, sv.degree);
        sg.multiplicity = draw_int(rng, 1, sg.degree);
        BiPoly u = random_curve(su), v = random_curve(sv), g = random_curve(sg);
        BiPoly uv = u * v;
        if (common_component_through(uv, g, kOrigin)) {
            st.pass++;  // additivity needs no common component; skip as vacuous
            continue;
        }
        IMReport whole = intersection_multiplicity(uv, g, kOrigin);
        IMReport left = intersection_multiplicity(u, g, kOrigin);
        IMReport right = intersection_multiplicity(v, g, kOrigin);
        const bool good = !whole.value.infinite && !left.value.infinite &&
                          !right.value.infinite &&
                          whole.value.value == left.value.value + right.value.value;
        if (good) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty()) st.first_failure = "trial " + std::to_string(t);
        }
    }
    return st;
}

PropertyStat prop_combination_invariance(int n, std::uint64_t seed, int max_deg, int max_mult,
                                         int bound) {
    PropertyStat st{"combination-invariance"};
    for (int t = 0; t < n; ++t) {
        TrialPair p = clean_pair(seed, t, max_deg, max_mult, bound);
        std::mt19937_64 rng(splitmix(seed ^ (0xb0ULL + static_cast<std::uint64_t>(t))));
        BiPoly h(p.f.context());
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                const int c = draw_int(rng, -3, 3);
                if (c != 0)
                    h.set_coeff(i, j, FieldElement::from_rational(p.f.context(), Rational(c)));
            }
        BiPoly g2 = p.g + h * p.f;
        IMReport base = intersection_multiplicity(p.f, p.g, kOrigin);
        IMReport comb = intersection_multiplicity(p.f, g2, kOrigin);
        if (base.value == comb.value) {
            st.pass++;
        } else {
            st.fail++;
            if (st.first_failure.empty()) st.first_failure = "trial " + std::to_string(t);
        }
    }
    return st;
}

BenchResult run_bench(const BenchOptions& opt, std::ostream* log) {
    BenchResult res;
    res.opt = opt;
    std::vector<std::int64_t> bt, at;
    for (int t = 0; t < opt.trials; ++t) {
        // Bench rows use exact degree/multiplicity, not a range.
        TrialPair p;
        std::mt19937_64 rng(
            splitmix(opt.seed ^ (0xbe9cULL + static_cast<std::uint64_t>(t))));
        for (;;) {
            p.spec_f = {opt.deg, opt.mult, opt.bound, rng()};
            p.spec_g = {opt.deg, opt.mult, opt.bound, rng()};
            p.f = random_curve(p.spec_f);
            p.g = random_curve(p.spec_g);
            if (!common_component_through(p.f, p.g, kOrigin)) break;
        }

        BenchTrialRow row;
        row.trial = t;
        IsolatedOutcome bo =
            run_isolated([&] { return blowup_payload(p.f, p.g); }, opt.timeout_ms);
        if (bo.finished) {
            ParsedPayload pp = parse_payload(bo.payload);
            row.blowup_us = pp.micros;
            row.blowup_value = pp.tag == 'I' ? "infinity" : std::to_string(pp.value);
        } else {
            row.blowup_dnf = true;
            row.blowup_us = bo.micros;
            res.blowup_dnf++;
        }
        IsolatedOutcome ao =
            run_isolated([&] { return fulton_payload(p.f, p.g); }, opt.timeout_ms);
        if (ao.finished && ao.payload[0] != 'X') {
            ParsedPayload pp = parse_payload(ao.payload);
            row.axioms_us = pp.micros;
            row.axioms_value = pp.tag == 'I' ? "infinity" : std::to_string(pp.value);
        } else {
            row.axioms_dnf = true;
            row.axioms_us = ao.micros;
            res.axioms_dnf++;
        }
        bt.push_back(row.blowup_us);
        at.push_back(row.axioms_us);
        if (log)
            *log << "  trial " << t << ": blowup "
                 << (row.blowup_dnf ? "DNF" : std::to_string(row.blowup_us) + "us")
                 << ", axioms "
                 << (row.axioms_dnf ? "DNF" : std::to_string(row.axioms_us) + "us") << "\n";
        res.rows.push_back(std::move(row));
    }
    auto median = [](std::vector<std::int64_t> v) -> std::int64_t {
        if (v.empty()) return 0;
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    auto mean = [](const std::vector<std::int64_t>& v) -> std::int64_t {
        if (v.empty()) return 0;
        return std::accumulate(v.begin(), v.end(), std::int64_t(0)) /
               static_cast<std::int64_t>(v.size());
    };
    res.blowup_median_us = median(bt);
    res.axioms_median_us = median(at);
    res.blowup_mean_us = mean(bt);
    res.axioms_mean_us = mean(at);
    return res;
}

std::string bench_csv(const BenchResult& r) {
    std::ostringstream os;
    os << "deg,mult,trial,algorithm,micros,value,dnf\n";
    for (const BenchTrialRow& row : r.rows) {
        os << r.opt.deg << "," << r.opt.mult << "," << row.trial << ",blowup," << row.blowup_us
           << "," << row.blowup_value << "," << (row.blowup_dnf ? 1 : 0) << "\n";
        os << r.opt.deg << "," << r.opt.mult << "," << row.trial << ",axioms," << row.axioms_us
           << "," << row.axioms_value << "," << (row.axioms_dnf ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace imult
