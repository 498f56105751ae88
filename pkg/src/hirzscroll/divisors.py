"""Divisors and line-bundle cohomology on Hirzebruch surfaces ``F_e``.

Classes are written ``a*C0 + b*f`` in ``Num(F_e)``, where ``C0`` is the
negative section (``C0^2 = -e``) and ``f`` a fibre of ``pi: F_e -> P^1``.

Cohomology is computed exactly: for ``a >= 0`` the direct image
``pi_* O(a*C0 + b*f) = Sym^a(O + O(-e)) (x) O(b)`` has no higher direct images,
so the groups are sums over line bundles on ``P^1``; for ``a = -1`` everything
vanishes and for ``a <= -2`` Serre duality reduces to ``a >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from hirzscroll.p1 import SplittingType, h0_line, h1_line


@dataclass(frozen=True)
class Surface:
    """The Hirzebruch surface ``F_e = P(O + O(-e))``."""

    e: int = 1

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"Hirzebruch invariant must be >= 0, got {self.e}")


F0 = Surface(0)
F1 = Surface(1)


@dataclass(frozen=True)
class DivisorClass:
    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b)

    __rmul__ = __mul__

    def __str__(self):
        if self.b == 0:
            return f"{self.a}C0"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}C0{sign}{abs(self.b)}f"

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Parse ``"a,b"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


C0 = DivisorClass(1, 0)
FIBRE = DivisorClass(0, 1)
ZERO = DivisorClass(0, 0)


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def reversed(self) -> "CohomologyTriple":
        return CohomologyTriple(self.h2, self.h1, self.h0)

    def as_dict(self) -> dict[str, int]:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "chi": self.chi}


@dataclass(frozen=True)
class PositivityReport:
    effective: bool
    nef: bool
    ample: bool
    very_ample: bool
    cone_effective: bool  # closed-form cone test, kept as a cross-check


def intersect(D1: DivisorClass, D2: DivisorClass, S: Surface = F1) -> int:
    """Intersection number on ``F_e``: ``C0^2 = -e, C0.f = 1, f^2 = 0``."""
    return -S.e * D1.a * D2.a + D1.a * D2.b + D2.a * D1.b


def canonical_class(S: Surface = F1) -> DivisorClass:
    return DivisorClass(-2, -(S.e + 2))


def chi_divisor(D: DivisorClass, S: Surface = F1) -> int:
    """Riemann-Roch: ``chi(D) = D.(D - K)/2 + 1``."""
    twice = intersect(D, D - canonical_class(S), S)
    assert twice % 2 == 0, f"D.(D-K) is odd for {D} on F_{S.e}"
    return twice // 2 + 1


def pushforward_line_bundle(D: DivisorClass, S: Surface = F1) -> SplittingType | None:
    """Splitting type of ``pi_* O(D)``, or ``None`` when ``D.f < 0`` (the
    direct image is zero)."""
    if D.a < 0:
        return None
    return SplittingType(D.b - j * S.e for j in range(D.a + 1))


def cohomology_divisor(D: DivisorClass, S: Surface = F1) -> CohomologyTriple:
    if D.a >= 0:
        T = pushforward_line_bundle(D, S)
        return CohomologyTriple(
            sum(h0_line(m) for m in T), sum(h1_line(m) for m in T), 0
        )
    if D.a == -1:
        return CohomologyTriple(0, 0, 0)
    return cohomology_divisor(canonical_class(S) - D, S).reversed()


def _cone_effective(D: DivisorClass, S: Surface) -> bool:
    # strip C0 while it is a fixed component (D.C0 < 0)
    while D.a > 0 and intersect(D, C0, S) < 0:
        D = D - C0
    return D.a >= 0 and D.b >= 0


def classify_divisor(D: DivisorClass, S: Surface = F1) -> PositivityReport:
    """Positivity flags on ``F_e``.

    Effectivity is decided by ``h^0(D) > 0``. Ampleness uses the criterion
    ``a > 0, b > a*e``, which on ``F_e`` is also very ampleness.
    """
    effective = cohomology_divisor(D, S).h0 > 0
    ample = D.a > 0 and D.b > D.a * S.e
    nef = D.a >= 0 and D.b >= D.a * S.e
    return PositivityReport(
        effective=effective,
        nef=nef,
        ample=ample,
        very_ample=ample,
        cone_effective=_cone_effective(D, S),
    )
