"""Chow ring of the 3-fold ``X = P(E)`` over ``F_e``, Chern classes of ``X``
and of its normal bundle in ``P^n``, and ``chi(N)`` by Hirzebruch-Riemann-Roch.

Elements are integer combinations of the basis

    degree 0: 1
    degree 1: L, C, F            (C = phi^*C0, F = phi^*f)
    degree 2: LC, LF, P          (P = phi^*pt)
    degree 3: pt                 (pt = L.P)

Products of pullbacks follow ``C^2 = -e P``, ``CF = P``, ``F^2 = 0``, and the
tautological class satisfies ``L^2 = L.c1 - c2 P``, which gives
``L^3 = c1^2 - c2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from hirzscroll.divisors import DivisorClass, canonical_class
from hirzscroll.scroll import ConsistencyError, ScrollFamily, embedding_dim, require_ass_3_1

BASIS = ("1", "L", "C", "F", "LC", "LF", "P", "pt")
GRADE = {"1": 0, "L": 1, "C": 1, "F": 1, "LC": 2, "LF": 2, "P": 2, "pt": 3}

# basis element -> (power of L, base class)
_SPLIT = {
    "1": (0, "1"), "L": (1, "1"), "C": (0, "C"), "F": (0, "F"),
    "LC": (1, "C"), "LF": (1, "F"), "P": (0, "P"), "pt": (1, "P"),
}
_JOIN = {v: k for k, v in _SPLIT.items()}
_BASE_GRADE = {"1": 0, "C": 1, "F": 1, "P": 2}


class GradeOverflow(ValueError):
    pass


@dataclass(frozen=True)
class ChowElement:
    coeffs: Mapping[str, int]

    def __init__(self, coeffs: Mapping[str, int] | None = None, **kw: int):
        merged = dict(coeffs or {})
        merged.update(kw)
        for key in merged:
            if key not in GRADE:
                raise KeyError(f"unknown basis element {key!r}")
        object.__setattr__(self, "coeffs", {k: v for k, v in merged.items() if v})

    def __getitem__(self, key: str) -> int:
        return self.coeffs.get(key, 0)

    def __add__(self, other: "ChowElement") -> "ChowElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return ChowElement(out)

    def __neg__(self) -> "ChowElement":
        return ChowElement({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def scale(self, c: int) -> "ChowElement":
        return ChowElement({k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c: int) -> "ChowElement":
        return self.scale(c)

    def grades(self) -> set[int]:
        return {GRADE[k] for k in self.coeffs}

    def grade(self) -> int:
        g = self.grades()
        if len(g) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return g.pop() if g else 0

    def part(self, g: int) -> "ChowElement":
        return ChowElement({k: v for k, v in self.coeffs.items() if GRADE[k] == g})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.coeffs.items(), key=lambda kv: BASIS.index(kv[0])))


ONE = ChowElement({"1": 1})
L = ChowElement({"L": 1})
C = ChowElement({"C": 1})
F = ChowElement({"F": 1})
P = ChowElement({"P": 1})
PT = ChowElement({"pt": 1})


def pullback(D: DivisorClass) -> ChowElement:
    return ChowElement({"C": D.a, "F": D.b})


class ChowRing:
    """Multiplication in ``A^*(P(E))`` for given ``e``, ``c1(E)``, ``c2(E)``."""

    def __init__(self, e: int, c1: DivisorClass, c2: int):
        self.e, self.c1, self.c2 = e, c1, c2
        # base products (Chow ring of F_e) as dicts over {1, C, F, P}
        self._base = {
            ("C", "C"): {"P": -e},
            ("C", "F"): {"P": 1},
            ("F", "C"): {"P": 1},
            ("F", "F"): {},
        }
        # L^2 = L*c1 - c2*P
        self._L2 = {(1, "C"): c1.a, (1, "F"): c1.b, (0, "P"): -c2}

    @classmethod
    def of(cls, family: ScrollFamily) -> "ChowRing":
        return cls(family.e, family.c1, family.c2)

    def _base_mul(self, x: str, y: str) -> dict[str, int]:
        if x == "1":
            return {y: 1}
        if y == "1":
            return {x: 1}
        if _BASE_GRADE[x] + _BASE_GRADE[y] > 2:
            return {}
        return self._base[(x, y)]

    def _mul_terms(self, lp: int, base: str, out: dict[str, int], coeff: int) -> None:
        """Add ``coeff * L^lp * base`` in normal form to ``out``."""
        if coeff == 0 or lp + _BASE_GRADE[base] > 3:
            return
        if lp <= 1:
            key = _JOIN[(lp, base)]
            out[key] = out.get(key, 0) + coeff
            return
        # L^2 = L*c1 - c2*P
        for (l2, b2), c in self._L2.items():
            for bk, bv in self._base_mul(b2, base).items():
                self._mul_terms(lp - 2 + l2, bk, out, coeff * c * bv)

    def mul(self, x: ChowElement, y: ChowElement) -> ChowElement:
        gx, gy = x.grades(), y.grades()
        if gx and gy and max(gx) + max(gy) > 3:
            raise GradeOverflow("product exceeds degree 3")
        out: dict[str, int] = {}
        for kx, vx in x.coeffs.items():
            lx, bx = _SPLIT[kx]
            for ky, vy in y.coeffs.items():
                ly, by = _SPLIT[ky]
                for bk, bv in self._base_mul(bx, by).items():
                    self._mul_terms(lx + ly, bk, out, vx * vy * bv)
        return ChowElement(out)

    def prod(self, *xs: ChowElement) -> ChowElement:
        out = ONE
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, x: ChowElement, n: int) -> ChowElement:
        return self.prod(*([x] * n))

    @staticmethod
    def degree(x: ChowElement) -> int:
        """Degree of the top-dimensional part."""
        return x["pt"]

    def deg(self, *xs: ChowElement) -> int:
        return self.degree(self.prod(*xs))


def reduce_product(x: ChowElement, y: ChowElement, family: ScrollFamily) -> ChowElement:
    return ChowRing.of(family).mul(x, y)


def canonical_class_X(family: ScrollFamily) -> ChowElement:
    """``K_X = -2L + phi^*(K_S + c1(E))``."""
    return -2 * L + pullback(canonical_class(family.surface) + family.c1)


def chern_classes_X(family: ScrollFamily) -> tuple[ChowElement, ChowElement, ChowElement]:
    """``c(T_X) = phi^* c(T_S) . c(T_rel)`` with ``T_rel = 2L - phi^*c1``
    from the relative Euler sequence."""
    R = ChowRing.of(family)
    c1S = pullback(-canonical_class(family.surface))
    c2S = 4 * P  # Euler number of F_e
    rel1 = 2 * L - pullback(family.c1)
    rel2 = R.mul(L, L) - R.mul(L, pullback(family.c1)) + family.c2 * P  # = 0
    c1X = c1S + rel1
    c2X = c2S + R.mul(c1S, rel1) + rel2
    c3X = R.mul(c2S, rel1) + R.mul(c1S, rel2)
    if c1X != -canonical_class_X(family):
        raise ConsistencyError("c1(X) != -K_X")
    return c1X, c2X, c3X


@dataclass(frozen=True)
class InvariantReport:
    d: int
    g: int
    n: int
    KL2: int
    K2L: int
    c2L: int
    K3: int
    Kc2: int
    c3: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _symbolic_invariants(family: ScrollFamily, n: int) -> InvariantReport:
    R = ChowRing.of(family)
    K = canonical_class_X(family)
    _, c2, c3 = chern_classes_X(family)
    d = R.deg(L, L, L)
    KL2 = R.deg(K, L, L)
    twice_g_minus_2 = KL2 + 2 * d
    assert twice_g_minus_2 % 2 == 0
    return InvariantReport(
        d=d,
        g=twice_g_minus_2 // 2 + 1,
        n=n,
        KL2=KL2,
        K2L=R.deg(K, K, L),
        c2L=R.deg(c2, L),
        K3=R.deg(K, K, K),
        Kc2=R.deg(K, c2),
        c3=R.degree(c3),
    )


def closed_form_invariants(b: int, k: int) -> InvariantReport:
    """The same invariants from the closed forms in ``(b, d)`` on ``F_1``."""
    d = 6 * b - 9 - k
    KL2 = -2 * d + 4 * b - 12
    return InvariantReport(
        d=d,
        g=(KL2 + 2 * d) // 2 + 1,
        n=embedding_dim(b, k),
        KL2=KL2,
        K2L=4 * d - 14 * b + 41,
        c2L=2 * b + 7,
        K3=-8 * d + 36 * b - 102,
        Kc2=-24,
        c3=8,
    )


def _family_n(family: ScrollFamily) -> int:
    # n + 1 = h^0(E) = chi(E) for non-special E with h^2(E) = 0
    return family.chi_E() - 1


def numerical_invariants(family: ScrollFamily) -> InvariantReport:
    if family.e == 1:
        require_ass_3_1(family.b, family.k)
    sym = _symbolic_invariants(family, _family_n(family))
    if family.e == 1:
        closed = closed_form_invariants(family.b, family.k)
        if sym != closed:
            raise ConsistencyError(f"symbolic {sym} != closed form {closed}")
    return sym


@dataclass(frozen=True)
class NormalChernData:
    """Chern classes of ``N = N_{X/P^n}`` and the degree-3 numbers entering
    ``chi(N)``."""

    n: int
    n1: ChowElement
    n2: ChowElement
    n3: ChowElement
    n1_cubed: int
    n1n2: int
    n3_deg: int
    c1n1sq: int
    c1n2: int
    c1sq_n1: int
    c2n1: int
    c1c2: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "n1^3": self.n1_cubed,
            "n1n2": self.n1n2,
            "n3": self.n3_deg,
            "c1n1^2": self.c1n1sq,
            "c1n2": self.c1n2,
            "c1^2n1": self.c1sq_n1,
            "c2n1": self.c2n1,
            "c1c2": self.c1c2,
        }


def normal_chern_classes(family: ScrollFamily, n: int) -> tuple[ChowElement, ChowElement, ChowElement]:
    """``c(N) = (1 + L)^(n+1) / c(T_X)``, truncated at degree 3."""
    R = ChowRing.of(family)
    c1, c2, c3 = chern_classes_X(family)
    # inverse of 1 + c1 + c2 + c3
    s1 = -c1
    s2 = R.mul(c1, c1) - c2
    s3 = -R.power(c1, 3) + 2 * R.mul(c1, c2) - c3
    amb = [ONE, (n + 1) * L, comb(n + 1, 2) * R.mul(L, L), comb(n + 1, 3) * R.power(L, 3)]
    s = [ONE, s1, s2, s3]
    out = []
    for deg in (1, 2, 3):
        term = ChowElement()
        for i in range(deg + 1):
            term = term + R.mul(amb[i], s[deg - i])
        out.append(term)
    return out[0], out[1], out[2]


def normal_classes_explicit(family: ScrollFamily, n: int) -> tuple[ChowElement, ChowElement, ChowElement]:
    """The same classes written out term by term in ``K, L, c2, c3``."""
    R = ChowRing.of(family)
    K = canonical_class_X(family)
    _, c2, c3 = chern_classes_X(family)
    n1 = K + (n + 1) * L
    n2 = (n * (n + 1) // 2) * R.mul(L, L) + (n + 1) * R.mul(L, K) + R.mul(K, K) - c2
    n3 = (
        ((n - 1) * n * (n + 1) // 6) * R.power(L, 3)
        + (n * (n + 1) // 2) * R.prod(K, L, L)
        + (n + 1) * R.prod(K, K, L)
        - (n + 1) * R.mul(c2, L)
        - 2 * R.mul(c2, K)
        + R.power(K, 3)
        - c3
    )
    return n1, n2, n3


def normal_chern_numbers(family: ScrollFamily, n: int | None = None) -> NormalChernData:
    if n is None:
        n = _family_n(family)
    R = ChowRing.of(family)
    c1, c2, _ = chern_classes_X(family)
    n1, n2, n3 = normal_chern_classes(family, n)
    if (n1, n2, n3) != normal_classes_explicit(family, n):
        raise ConsistencyError("normal-bundle Chern classes disagree with the explicit formulas")
    return NormalChernData(
        n=n, n1=n1, n2=n2, n3=n3,
        n1_cubed=R.deg(n1, n1, n1),
        n1n2=R.deg(n1, n2),
        n3_deg=R.degree(n3),
        c1n1sq=R.deg(c1, n1, n1),
        c1n2=R.deg(c1, n2),
        c1sq_n1=R.deg(c1, c1, n1),
        c2n1=R.deg(c2, n1),
        c1c2=R.deg(c1, c2),
    )


def chi_structure_sheaf(family: ScrollFamily) -> Fraction:
    """``chi(O_X) = c1 c2 / 24``."""
    c1, c2, _ = chern_classes_X(family)
    return Fraction(ChowRing.of(family).deg(c1, c2), 24)


def chi_normal_hrr(family: ScrollFamily, n: int | None = None) -> Fraction:
    """``chi(N)`` by HRR, exact; not yet checked for integrality."""
    data = normal_chern_numbers(family, n)
    chi_O = chi_structure_sheaf(family)
    return (
        Fraction(data.n1_cubed - 3 * data.n1n2 + 3 * data.n3_deg, 6)
        + Fraction(data.c1n1sq - 2 * data.c1n2, 4)
        + Fraction(data.c1sq_n1 + data.c2n1, 12)
        + (data.n - 3) * chi_O
    )


def chi_normal_collapsed(b: int, k: int) -> int:
    d, n = 6 * b - 9 - k, embedding_dim(b, k)
    return (-2 * b + 8 + d) * n - 29 + 16 * b - 3 * d


def chi_normal_expected(b: int, k: int) -> int:
    n = embedding_dim(b, k)
    return n * (n + 1) + 3 * k - 2 * b - 2


def chi_normal(family: ScrollFamily) -> int:
    value = chi_normal_hrr(family)
    if value.denominator != 1:
        raise ConsistencyError(f"chi(N) = {value} is not an integer")
    value = int(value)
    if family.e == 1:
        collapsed = chi_normal_collapsed(family.b, family.k)
        expected = chi_normal_expected(family.b, family.k)
        if not value == collapsed == expected:
            raise ConsistencyError(
                f"chi(N): HRR {value}, collapsed {collapsed}, expected {expected} "
                f"at (b, k) = ({family.b}, {family.k})"
            )
    return value
