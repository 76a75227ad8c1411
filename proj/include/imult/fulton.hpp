#ifndef IMULT_FULTON_HPP
#define IMULT_FULTON_HPP

#include <cstdint>

#include "imult/blowup.hpp"

namespace imult {

/// Result of the axioms-based reduction. Exhausted reports that the step
/// budget ran out before the value was pinned down (the reduction has no
/// a-priori bound on its step count).
struct FultonOutcome {
    enum class Kind { Finite, Infinite, Exhausted };
    Kind kind = Kind::Finite;
    std::uint64_t value = 0;
    std::uint64_t steps = 0;

    IMValue as_im() const {
        return kind == Kind::Infinite ? IMValue::inf() : IMValue::finite(value);
    }
};

/// Independent oracle for the intersection number, derived from the defining
/// axioms: swap so deg f(x,0) <= deg g(x,0), cancel the leading x-term of
/// g(x,0) with a multiple of f (which leaves the value unchanged), and peel
/// factors of y off whichever curve loses its x-section, each peel
/// contributing ord_x of the other section. Entirely over Q.
FultonOutcome fulton_im(const BiPoly& f, const BiPoly& g, const RatPoint& P,
                        std::uint64_t step_budget);

/// True iff gcd(f, g) is non-constant and vanishes at P.
bool common_component_through(const BiPoly& f, const BiPoly& g, const RatPoint& P);

struct ResultantDiagnostic {
    std::size_t order = 0;    // multiplicity of x = 0 in Res_y(f, g)
    bool applicable = false;  // guards met, so order equals the value at (0,0)
};

/// Order of x = 0 in the y-resultant, with the applicability guards: both
/// leading y-coefficients are nonzero constants and gcd(f(0,y), g(0,y)) is a
/// power of y up to a unit, i.e. the origin is the only common point on the
/// line x = 0 and no intersection escapes to infinity in y.
ResultantDiagnostic resultant_order_diagnostic(const BiPoly& f, const BiPoly& g);

struct RandomCurveSpec {
    int degree = 1;
    int multiplicity = 1;       // at the origin
    int coefficient_bound = 10;
    std::uint64_t seed = 0;
};

/// Deterministic random curve: homogeneous parts of degrees multiplicity
/// through degree with integer coefficients in [-bound, bound], resampled
/// until both the lowest and the top form are nonzero.
BiPoly random_curve(const RandomCurveSpec& spec);

}  // namespace imult

#endif
