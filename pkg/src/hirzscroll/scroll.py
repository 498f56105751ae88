"""The family ``E(b, k)``: rank-two bundles on ``F_e`` with ``c1 = 3C0 + bf``,
``c2 = k``, extensions ``0 -> A -> E -> B -> 0`` of line bundles.

The closed forms below are the case formulas for ``e = 1``; each one is
cross-checked against exact divisor cohomology from :mod:`hirzscroll.divisors`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from hirzscroll.divisors import (
    DivisorClass,
    Surface,
    chi_divisor,
    cohomology_divisor,
    intersect,
)


class ParameterError(ValueError):
    """Parameters fall outside the range where a formula is stated."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class ScrollFamily:
    """``c1(E) = 3C0 + bf``, ``c2(E) = k`` on ``F_e``.

    ``A = 2C0 + (2b - k - 2e)f`` and ``B = C0 + (k - b + 2e)f`` are the unique
    classes of this shape with ``A + B = c1`` and ``A.B = k``.
    """

    b: int
    k: int
    e: int = 1

    def __post_init__(self):
        assert self.A + self.B == self.c1
        assert intersect(self.A, self.B, self.surface) == self.k

    @property
    def surface(self) -> Surface:
        return Surface(self.e)

    @property
    def c1(self) -> DivisorClass:
        return DivisorClass(3, self.b)

    @property
    def c2(self) -> int:
        return self.k

    @property
    def A(self) -> DivisorClass:
        return DivisorClass(2, 2 * self.b - self.k - 2 * self.e)

    @property
    def B(self) -> DivisorClass:
        return DivisorClass(1, self.k - self.b + 2 * self.e)

    def chi_E(self) -> int:
        return chi_divisor(self.A, self.surface) + chi_divisor(self.B, self.surface)


@dataclass(frozen=True)
class RegimeReport:
    b: int
    k: int
    meets_ass_3_1: bool  # k >= b >= 4
    meets_ass_5_1: bool  # 5 <= b <= k <= 4b - 8
    split_regime: bool  # k < (3b - 3)/2: every extension splits
    thm_van_case: str  # "i", "ii" or "out-of-range"

    def as_dict(self) -> dict:
        return {
            "meets_ass_3_1": self.meets_ass_3_1,
            "meets_ass_5_1": self.meets_ass_5_1,
            "split_regime": self.split_regime,
            "thm_van_case": self.thm_van_case,
        }


def _split(b: int, k: int) -> bool:
    return 2 * k < 3 * b - 3


def validate_family(b: int, k: int) -> RegimeReport:
    if b <= k <= 2 * b - 3:
        case = "i"
    elif 2 * b - 2 <= k <= 4 * b - 1:
        case = "ii"
    else:
        case = "out-of-range"
    return RegimeReport(
        b=b,
        k=k,
        meets_ass_3_1=k >= b >= 4,
        meets_ass_5_1=5 <= b <= k <= 4 * b - 8,
        split_regime=_split(b, k),
        thm_van_case=case,
    )


def require_ass_3_1(b: int, k: int) -> None:
    if not k >= b >= 4:
        raise ParameterError(f"(b, k) = ({b}, {k}) violates k >= b >= 4")


def require_ass_5_1(b: int, k: int) -> None:
    if not 5 <= b <= k <= 4 * b - 8:
        raise ParameterError(f"(b, k) = ({b}, {k}) violates 5 <= b <= k <= 4b - 8")


def dim_ext1(b: int, k: int) -> int:
    """``dim Ext^1(B, A)``: 0 in the split regime, else ``4k - 6b + 7``."""
    if _split(b, k):
        return 0
    return 4 * k - 6 * b + 7


def h1_A(b: int, k: int) -> int:
    require_ass_3_1(b, k)
    if k <= 2 * b - 3:
        return 0
    if k == 2 * b - 2:
        return 1
    return 3 * k - 6 * b + 6


def h0_A(b: int, k: int) -> int:
    return 6 * b - 3 * k - 6 + h1_A(b, k)


def h0_B(b: int, k: int) -> int:
    return 2 * k - 2 * b + 5


def end_dim(b: int, k: int) -> int:
    """``h^0(E (x) E^dual)`` for the split bundle, resp. a general
    indecomposable one."""
    require_ass_3_1(b, k)
    if _split(b, k):
        return 6 * b - 4 * k - 5
    return 1


def check_h0B_ge_h1A(b: int, k: int) -> bool:
    return h0_B(b, k) >= h1_A(b, k)


@dataclass(frozen=True)
class CohomologyTable:
    h0A: int
    h1A: int
    h0B: int
    h0E_generic: Optional[int]
    h1E_generic: Optional[int]  # None: beyond k = 4b - 1, not covered

    @property
    def covered(self) -> bool:
        return self.h1E_generic is not None

    def as_dict(self) -> dict:
        return {
            "h0A": self.h0A,
            "h1A": self.h1A,
            "h0B": self.h0B,
            "h0E_generic": self.h0E_generic,
            "h1E_generic": self.h1E_generic,
        }


def cohomology_table(b: int, k: int) -> CohomologyTable:
    require_ass_3_1(b, k)
    fam = ScrollFamily(b, k)
    A = cohomology_divisor(fam.A, fam.surface)
    B = cohomology_divisor(fam.B, fam.surface)
    t_h1A, t_h0A, t_h0B = h1_A(b, k), h0_A(b, k), h0_B(b, k)
    if (A.h0, A.h1, A.h2) != (t_h0A, t_h1A, 0) or (B.h0, B.h1, B.h2) != (t_h0B, 0, 0):
        raise ConsistencyError(
            f"closed forms {(t_h0A, t_h1A, t_h0B)} disagree with exact "
            f"cohomology {(A.h0, A.h1, B.h0)} at (b, k) = ({b}, {k})"
        )
    if k <= 4 * b - 1:
        h1E = 0
        h0E = 4 * b - k - 1 + h1E
    else:
        h1E = h0E = None
    return CohomologyTable(t_h0A, t_h1A, t_h0B, h0E, h1E)


def embedding_dim(b: int, k: int) -> int:
    """``n = h^0(E) - 1`` for a general non-special ``E``."""
    return 4 * b - k - 2


def degree(b: int, k: int) -> int:
    return 6 * b - 9 - k
