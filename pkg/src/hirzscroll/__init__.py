"""Exact cohomology, Chow-ring and Hilbert-scheme counts for 3-fold scrolls
over Hirzebruch surfaces.

Everything is computed with Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere in the package.
"""

from hirzscroll.divisors import (
    CohomologyTriple,
    DivisorClass,
    PositivityReport,
    Surface,
    canonical_class,
    chi_divisor,
    classify_divisor,
    cohomology_divisor,
    intersect,
    pushforward_line_bundle,
)
from hirzscroll.p1 import SplittingType, balanced_partition, splitting_cohomology

__version__ = "0.1.0"

__all__ = [
    "CohomologyTriple",
    "DivisorClass",
    "PositivityReport",
    "SplittingType",
    "Surface",
    "balanced_partition",
    "canonical_class",
    "chi_divisor",
    "classify_divisor",
    "cohomology_divisor",
    "intersect",
    "pushforward_line_bundle",
    "splitting_cohomology",
    "__version__",
]
