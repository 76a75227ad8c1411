#ifndef IMULT_HARNESS_HPP
#define IMULT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "imult/fulton.hpp"

namespace imult {

/// Runs work() in a forked child under a wall-clock deadline; the child is
/// killed on expiry. Keeps the math core free of timeout plumbing while a
/// runaway trial cannot take the driver down with it.
struct IsolatedOutcome {
    bool finished = false;
    std::int64_t micros = 0;  // child-measured when finished, else wall time
    std::string payload;
};

IsolatedOutcome run_isolated(const std::function<std::string()>& work,
                             std::int64_t timeout_ms);

/// Deterministic trial pair: degrees and multiplicities drawn from the trial
/// index, curves from derived seeds.
struct TrialPair {
    BiPoly f, g;
    RandomCurveSpec spec_f, spec_g;
};

TrialPair make_trial_pair(std::uint64_t base_seed, int trial, int max_deg, int max_mult,
                          int bound);

struct VerifyOptions {
    int trials = 200;
    std::uint64_t seed = 42;
    int max_deg = 5;
    int max_mult = 3;
    int bound = 10;
    std::int64_t timeout_ms = 10000;
    int prop_trials = 100;
    bool run_properties = true;
};

struct PropertyStat {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::string first_failure;
};

struct VerifyResult {
    int trials = 0;
    int agreements = 0;
    int disagreements = 0;
    int oracle_dnf = 0;
    int infinite_skipped = 0;
    std::string first_disagreement;
    int max_depth_seen = 0;
    bool depth_bound_ok = true;
    std::vector<PropertyStat> properties;

    bool ok() const;
};

/// Oracle-equivalence run plus the property suites. Blowup runs in-process
/// (it carries the stats the depth checks need); the oracle runs isolated
/// under the timeout and a timed-out trial counts as DNF and is skipped.
VerifyResult run_verify(const VerifyOptions& opt, std::ostream* log);

// Individual property suites (also reused by the acceptance tests).
PropertyStat prop_symmetry(int n, std::uint64_t seed, int max_deg, int max_mult, int bound);
PropertyStat prop_zero_law(int n, std::uint64_t seed, int max_deg, int max_mult, int bound);
PropertyStat prop_lower_bound(int n, std::uint64_t seed, int max_deg, int max_mult, int bound);
PropertyStat prop_affine_invariance(int n, std::uint64_t seed, int max_deg, int max_mult,
                                    int bound);
PropertyStat prop_product_additivity(int n, std::uint64_t seed, int max_deg, int bound);
PropertyStat prop_combination_invariance(int n, std::uint64_t seed, int max_deg, int max_mult,
                                         int bound);

struct BenchOptions {
    int deg = 5;
    int mult = 3;
    int trials = 10;
    int bound = 10;
    std::uint64_t seed = 42;
    std::int64_t timeout_ms = 10000;
};

struct BenchTrialRow {
    int trial = 0;
    std::int64_t blowup_us = 0, axioms_us = 0;
    bool blowup_dnf = false, axioms_dnf = false;
    std::string blowup_value, axioms_value;  // empty when DNF
};

struct BenchResult {
    BenchOptions opt;
    std::vector<BenchTrialRow> rows;
    std::int64_t blowup_median_us = 0, axioms_median_us = 0;
    std::int64_t blowup_mean_us = 0, axioms_mean_us = 0;
    int blowup_dnf = 0, axioms_dnf = 0;
};

/// Times both algorithms per trial, each isolated under the timeout.
BenchResult run_bench(const BenchOptions& opt, std::ostream* log);

/// "deg,mult,trial,algorithm,micros,value,dnf" rows.
std::string bench_csv(const BenchResult& r);

}  // namespace imult

#endif
