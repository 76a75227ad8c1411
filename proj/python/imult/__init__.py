"""Exact local intersection multiplicity of plane algebraic curves.

The heavy lifting happens in the `_imult` extension: exact rationals (GMP),
dynamic field extensions, and the blowup recursion. This package re-exports
its surface.
"""

from imult._imult import (
    InternalError,
    MathError,
    ParseError,
    Poly,
    UsageError,
    common_component_through,
    fulton_im,
    golden_examples,
    intersection_multiplicity,
    parse,
    random_curve,
    resultant_order,
)

__all__ = [
    "InternalError",
    "MathError",
    "ParseError",
    "Poly",
    "UsageError",
    "common_component_through",
    "fulton_im",
    "golden_examples",
    "intersection_multiplicity",
    "parse",
    "random_curve",
    "resultant_order",
]
