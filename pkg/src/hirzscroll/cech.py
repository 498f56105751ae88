"""Cech cohomology on ``P^1`` for the standard two-chart cover, and the
extension oracle built on it.

On ``P^1`` with homogeneous coordinates ``s, t``:

* ``H^0(O(m))`` has basis the monomials ``s^i t^(m-i)``, ``0 <= i <= m``;
* ``H^1(O(m))`` has basis the Laurent monomials ``s^p t^q`` with
  ``p, q <= -1`` and ``p + q = m``.

Cup product ``H^0 x H^1 -> H^1`` multiplies monomials and drops every product
with a non-negative exponent, since those are coboundaries.

For the family on ``F_1`` with ``A = 2C0 + (2b-k-2)f`` and
``B = C0 + (k-b+2)f``, Leray splits every relevant group into graded pieces
indexed by the power of the fibre coordinate ``y`` of ``O + O(-1)``:

* ``pi_* B``     = ``O(k-b+2) y^0 + O(k-b+1) y^1``
* ``pi_* (A-B)`` = ``O(3b-2k-4) y^0 + O(3b-2k-5) y^1``
* ``pi_* A``     = ``O(2b-k-2) y^0 + O(2b-k-3) y^1 + O(2b-k-4) y^2``

so a class ``e`` in ``Ext^1(B, A) = H^1(A - B)`` is a pair ``(e0, e1)`` of
cocycles, and the connecting map ``H^0(B) -> H^1(A)`` sends piece ``j`` of
``B`` into piece ``i + j`` of ``A`` by cup with ``e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from hirzscroll.linalg import RationalMatrix
from hirzscroll.p1 import SplittingType, h0_line, h1_line, type_from_h0

# Degree shifts of the graded pieces relative to piece 0.
_PIECES_B = (0, 1)
_PIECES_AB = (0, 1)
_PIECES_A = (0, 1, 2)


class LaurentMonomial(NamedTuple):
    p: int
    q: int

    @property
    def degree(self) -> int:
        return self.p + self.q

    def __str__(self):
        return f"s^{self.p}t^{self.q}"


def h1_basis(m: int) -> list[LaurentMonomial]:
    """Cech basis of ``H^1(P^1, O(m))``, ordered by decreasing ``s``-exponent."""
    return [LaurentMonomial(p, m - p) for p in range(-1, m, -1)]


def h0_basis(m: int) -> list[tuple[int, int]]:
    """Monomial basis ``(i, j)`` <-> ``s^i t^j`` of ``H^0(P^1, O(m))``."""
    return [(i, m - i) for i in range(m + 1)]


@dataclass(frozen=True)
class Section:
    """A homogeneous polynomial in ``s, t``, i.e. an element of ``H^0(O(degree))``."""

    degree: int
    coeffs: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 0 and self.coeffs:
            raise ValueError("O(m) has no sections for m < 0")
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0 or i + j != self.degree:
                raise ValueError(f"s^{i}t^{j} is not a monomial of degree {self.degree}")

    @classmethod
    def monomial(cls, i: int, j: int, c: Fraction | int = 1) -> "Section":
        return cls(i + j, {(i, j): Fraction(c)})

    @classmethod
    def from_vector(cls, degree: int, vector: Iterable) -> "Section":
        basis = h0_basis(degree)
        vector = list(vector)
        if len(vector) != len(basis):
            raise ValueError(f"H^0(O({degree})) has dimension {len(basis)}")
        return cls(degree, {m: Fraction(c) for m, c in zip(basis, vector) if c})

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(m, Fraction(0)) for m in h0_basis(self.degree)]

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())


@dataclass(frozen=True)
class Cocycle:
    """An element of ``H^1(P^1, O(degree))`` in the Laurent-monomial basis."""

    degree: int
    coeffs: Mapping[LaurentMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for mono in self.coeffs:
            if mono.p > -1 or mono.q > -1 or mono.p + mono.q != self.degree:
                raise ValueError(f"{mono} is not a basis monomial of H^1(O({self.degree}))")

    @classmethod
    def zero(cls, degree: int) -> "Cocycle":
        return cls(degree, {})

    @classmethod
    def from_vector(cls, degree: int, vector: Iterable) -> "Cocycle":
        basis = h1_basis(degree)
        vector = list(vector)
        if len(vector) != len(basis):
            raise ValueError(f"H^1(O({degree})) has dimension {len(basis)}")
        return cls(degree, {m: Fraction(c) for m, c in zip(basis, vector) if c})

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(m, Fraction(0)) for m in h1_basis(self.degree)]

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())

    def scaled(self, c: Fraction | int) -> "Cocycle":
        return Cocycle(self.degree, {m: c * v for m, v in self.coeffs.items() if c * v})

    def __add__(self, other: "Cocycle") -> "Cocycle":
        if other.degree != self.degree:
            raise ValueError("cannot add cocycles of different degree")
        out = dict(self.coeffs)
        for m, v in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + v
        return Cocycle(self.degree, {m: v for m, v in out.items() if v})

    def __eq__(self, other):
        if not isinstance(other, Cocycle):
            return NotImplemented
        return self.degree == other.degree and self.to_vector() == other.to_vector()

    def __hash__(self):
        return hash((self.degree, tuple(self.to_vector())))


def cup_product(section: Section, c: Cocycle) -> Cocycle:
    """``section \\cup c`` in ``H^1(O(section.degree + c.degree))``."""
    if section.degree < 0:
        raise ValueError("section degree must be >= 0")
    out: dict[LaurentMonomial, Fraction] = {}
    for (i, j), a in section.coeffs.items():
        for mono, v in c.coeffs.items():
            p, q = mono.p + i, mono.q + j
            if p <= -1 and q <= -1:
                key = LaurentMonomial(p, q)
                out[key] = out.get(key, Fraction(0)) + a * v
    return Cocycle(section.degree + c.degree, {m: v for m, v in out.items() if v})


@dataclass(frozen=True)
class StructuredExtension:
    """A class in ``Ext^1(B, A) = H^1(F_1, A - B)`` as its two graded pieces."""

    b: int
    k: int
    e0: Cocycle
    e1: Cocycle

    def __post_init__(self):
        m = ext_degree(self.b, self.k)
        if self.e0.degree != m or self.e1.degree != m - 1:
            raise ValueError(
                f"pieces must have degrees ({m}, {m - 1}), "
                f"got ({self.e0.degree}, {self.e1.degree})"
            )

    @classmethod
    def zero(cls, b: int, k: int) -> "StructuredExtension":
        m = ext_degree(b, k)
        return cls(b, k, Cocycle.zero(m), Cocycle.zero(m - 1))

    @classmethod
    def from_vector(cls, b: int, k: int, vector: Iterable) -> "StructuredExtension":
        m = ext_degree(b, k)
        vector = list(vector)
        n0 = h1_line(m)
        return cls(
            b, k, Cocycle.from_vector(m, vector[:n0]), Cocycle.from_vector(m - 1, vector[n0:])
        )

    def to_vector(self) -> list[Fraction]:
        return self.e0.to_vector() + self.e1.to_vector()

    @property
    def pieces(self) -> tuple[Cocycle, Cocycle]:
        return (self.e0, self.e1)

    def is_zero(self) -> bool:
        return self.e0.is_zero() and self.e1.is_zero()

    def scaled(self, c: Fraction | int) -> "StructuredExtension":
        return StructuredExtension(self.b, self.k, self.e0.scaled(c), self.e1.scaled(c))


@dataclass(frozen=True)
class UnstructuredExtension:
    """An arbitrary class in ``Ext^1(pi_* B, pi_* A)`` on ``P^1``.

    ``blocks[(j, l)]`` lies in ``H^1(O(deg A_l - deg B_j))``. The structured
    family is the sub-family with ``blocks[(j, l)] = e_(l-j)`` for
    ``l - j in {0, 1}`` and zero otherwise.
    """

    b: int
    k: int
    blocks: Mapping[tuple[int, int], Cocycle]


def ext_degree(b: int, k: int) -> int:
    """Degree of piece 0 of ``pi_*(A - B)``."""
    return 3 * b - 2 * k - 4


def _b_degrees(b: int, k: int, t: int = 0) -> list[int]:
    return [k - b + 2 - j + t for j in _PIECES_B]


def _a_degrees(b: int, k: int, t: int = 0) -> list[int]:
    return [2 * b - k - 2 - l + t for l in _PIECES_A]


def _labels_h0(degrees: list[int], name: str) -> list[str]:
    return [f"{name}{j}:s^{i}t^{jj}" for j, m in enumerate(degrees) for (i, jj) in h0_basis(m)]


def _labels_h1(degrees: list[int], name: str) -> list[str]:
    return [f"{name}{j}:{mono}" for j, m in enumerate(degrees) for mono in h1_basis(m)]


def _offsets(sizes: list[int]) -> list[int]:
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def _connecting_matrix(
    blocks: Mapping[tuple[int, int], Cocycle], b_degs: list[int], a_degs: list[int]
) -> RationalMatrix:
    """Matrix of ``sigma -> -(sigma \\cup e)`` from ``H^0(pi_* B)`` to ``H^1(pi_* A)``.

    ``blocks[(j, l)]`` is the component of ``e`` from piece ``j`` of ``B`` to
    piece ``l`` of ``A``.
    """
    row_labels = _labels_h1(a_degs, "A")
    col_labels = _labels_h0(b_degs, "B")
    M = RationalMatrix.zeros(row_labels, col_labels)
    row_off = _offsets([h1_line(m) for m in a_degs])
    col_off = _offsets([h0_line(m) for m in b_degs])
    for (j, l), c in blocks.items():
        if c.is_zero() or h1_line(a_degs[l]) == 0:
            continue
        target = {mono: r for r, mono in enumerate(h1_basis(a_degs[l]))}
        for col, (i, jj) in enumerate(h0_basis(b_degs[j])):
            image = cup_product(Section.monomial(i, jj), c)
            for mono, v in image.coeffs.items():
                M.rows[row_off[l] + target[mono]][col_off[j] + col] -= v
    return M


def _structured_blocks(x: StructuredExtension) -> dict[tuple[int, int], Cocycle]:
    # twisting by pi^*O(t) leaves A - B, hence e, unchanged
    return {(j, j + i): x.pieces[i] for j in _PIECES_B for i in _PIECES_AB}


def coboundary_matrix(x: StructuredExtension, twist: int = 0) -> RationalMatrix:
    """Connecting map ``H^0(B(t)) -> H^1(A(t))`` of ``0 -> A -> E -> B -> 0``
    twisted by ``t`` fibres, shape ``h^1(A(t)) x h^0(B(t))``."""
    return _connecting_matrix(
        _structured_blocks(x), _b_degrees(x.b, x.k, twist), _a_degrees(x.b, x.k, twist)
    )


def unstructured_coboundary_matrix(x: UnstructuredExtension, twist: int = 0) -> RationalMatrix:
    return _connecting_matrix(
        x.blocks, _b_degrees(x.b, x.k, twist), _a_degrees(x.b, x.k, twist)
    )


def _h0_h1_sum(degs: list[int]) -> tuple[int, int]:
    return sum(h0_line(m) for m in degs), sum(h1_line(m) for m in degs)


def _cohomology_from_matrix(M: RationalMatrix, b_degs, a_degs) -> tuple[int, int]:
    # on P^1 the sequence ends ... -> H^1(A) -> H^1(E) -> H^1(B) -> 0
    h0A, h1A = _h0_h1_sum(a_degs)
    h0B, h1B = _h0_h1_sum(b_degs)
    rank = M.rank()
    return h0A + h0B - rank, h1A - rank + h1B


def extension_cohomology(x: StructuredExtension | UnstructuredExtension, twist: int = 0) -> tuple[int, int]:
    """``(h0(E), h1(E))`` of the extension twisted by ``twist`` fibres, from the
    long exact sequence of ``0 -> A -> E -> B -> 0``."""
    b_degs, a_degs = _b_degrees(x.b, x.k, twist), _a_degrees(x.b, x.k, twist)
    if isinstance(x, StructuredExtension):
        M = coboundary_matrix(x, twist)
    else:
        M = unstructured_coboundary_matrix(x, twist)
    return _cohomology_from_matrix(M, b_degs, a_degs)


def _rng(seed: int, trial: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _draw(rng: np.random.Generator, n: int, bound: int) -> list[int]:
    if n == 0:
        return []
    return [int(v) for v in rng.integers(-bound, bound, size=n, endpoint=True)]


def sample_extension(
    b: int, k: int, seed: int = 0, coeff_bound: int = 100, trial: int = 0
) -> StructuredExtension:
    """A pseudorandom class with integer coefficients in ``[-bound, bound]``.

    The generator is seeded by ``(seed, trial)`` so every trial is
    reproducible on its own.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    m = ext_degree(b, k)
    rng = _rng(seed, trial)
    n = h1_line(m) + h1_line(m - 1)
    return StructuredExtension.from_vector(b, k, _draw(rng, n, coeff_bound))


def sample_unstructured_extension(
    b: int, k: int, seed: int = 0, coeff_bound: int = 100, trial: int = 0
) -> UnstructuredExtension:
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    rng = _rng(seed, trial)
    b_degs, a_degs = _b_degrees(b, k), _a_degrees(b, k)
    blocks = {}
    for j, mb in enumerate(b_degs):
        for l, ma in enumerate(a_degs):
            m = ma - mb
            blocks[(j, l)] = Cocycle.from_vector(m, _draw(rng, h1_line(m), coeff_bound))
    return UnstructuredExtension(b, k, blocks)


def unstructured_ext_dim(b: int, k: int) -> int:
    return sum(h1_line(ma - mb) for mb in _b_degrees(b, k) for ma in _a_degrees(b, k))


@dataclass(frozen=True)
class GenericCertificate:
    achieved_rank: int
    theoretical_max: int
    trials_used: int
    best_trial: int
    structured: bool

    @property
    def certified(self) -> bool:
        """The sampled rank is maximal, so it is the generic rank."""
        return self.achieved_rank == self.theoretical_max

    def as_dict(self) -> dict:
        return {
            "achieved_rank": self.achieved_rank,
            "theoretical_max": self.theoretical_max,
            "trials_used": self.trials_used,
            "best_trial": self.best_trial,
            "structured": self.structured,
            "certified": self.certified,
        }


def generic_extension_cohomology(
    b: int,
    k: int,
    trials: int = 5,
    seed: int = 0,
    coeff_bound: int = 100,
    structured: bool = True,
) -> tuple[int, int, GenericCertificate]:
    """Cohomology of a general extension, certified by semicontinuity.

    The rank of the connecting map can only drop on a closed subset, so the
    largest rank seen over the samples is a lower bound for the generic rank,
    and equals it once it reaches ``min(h^0(B), h^1(A))``. Sampling stops at
    that point.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    b_degs, a_degs = _b_degrees(b, k), _a_degrees(b, k)
    h0A, h1A = _h0_h1_sum(a_degs)
    h0B, _ = _h0_h1_sum(b_degs)
    cap = min(h0B, h1A)
    sampler = sample_extension if structured else sample_unstructured_extension
    best_rank, best_trial, used = -1, 0, 0
    for trial in range(trials):
        x = sampler(b, k, seed, coeff_bound, trial)
        if structured:
            M = coboundary_matrix(x)
        else:
            M = unstructured_coboundary_matrix(x)
        rank = M.rank()
        used += 1
        if rank > best_rank:
            best_rank, best_trial = rank, trial
        if best_rank == cap:
            break
    cert = GenericCertificate(best_rank, cap, used, best_trial, structured)
    return h0A + h0B - best_rank, h1A - best_rank, cert


def cup_with_section(b: int, k: int, sigma: tuple[Section, Section]) -> RationalMatrix:
    """Matrix of ``e -> sigma \\cup e`` from ``H^1(A - B)`` to ``H^1(A)``.

    ``sigma = (sigma0, sigma1)`` is a section of ``B`` given by its two graded
    pieces; columns are indexed by the slots of ``(e0, e1)``.
    """
    b_degs = _b_degrees(b, k)
    if len(sigma) != 2 or any(s.degree != d for s, d in zip(sigma, b_degs)):
        raise ValueError(f"sigma must be a pair of sections of degrees {tuple(b_degs)}")
    if all(s.is_zero() for s in sigma):
        raise ValueError("sigma must be a nonzero section of B")
    m = ext_degree(b, k)
    e_degs = [m, m - 1]
    a_degs = _a_degrees(b, k)
    row_labels = _labels_h1(a_degs, "A")
    col_labels = _labels_h1(e_degs, "e")
    M = RationalMatrix.zeros(row_labels, col_labels)
    row_off = _offsets([h1_line(d) for d in a_degs])
    col_off = _offsets([h1_line(d) for d in e_degs])
    for i, d in enumerate(e_degs):
        for col, mono in enumerate(h1_basis(d)):
            basis_el = Cocycle(d, {mono: Fraction(1)})
            for j, s in enumerate(sigma):
                l = i + j
                image = cup_product(s, basis_el)
                target = {mn: r for r, mn in enumerate(h1_basis(a_degs[l]))}
                for mn, v in image.coeffs.items():
                    M.rows[row_off[l] + target[mn]][col_off[i] + col] += v
    return M


def sample_section(b: int, k: int, seed: int = 0, coeff_bound: int = 100) -> tuple[Section, Section]:
    """A pseudorandom section of ``B`` (as its two graded pieces)."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x5EC7]))
    out = []
    for d in _b_degrees(b, k):
        out.append(Section.from_vector(d, _draw(rng, h0_line(d), coeff_bound)))
    if all(s.is_zero() for s in out):
        # astronomically unlikely; fall back to a monomial
        out[0] = Section.monomial(out[0].degree, 0)
    return out[0], out[1]


def splitting_type_of_extension(x: StructuredExtension | UnstructuredExtension) -> SplittingType:
    """Splitting type of ``pi_* E`` read off from ``t -> h^0(E(t f))``.

    Each ``h^0`` comes from the twisted connecting map. The summands of
    ``pi_* E`` lie between the smallest and largest degree of ``pi_* A`` and
    ``pi_* B``, which bounds the twists that need evaluating.
    """
    b_degs, a_degs = _b_degrees(x.b, x.k), _a_degrees(x.b, x.k)
    lo, hi = min(a_degs + b_degs), max(a_degs + b_degs)

    cache: dict[int, int] = {}

    def h0(t: int) -> int:
        if t not in cache:
            cache[t] = extension_cohomology(x, t)[0]
        return cache[t]

    # largest twist with no sections: binary search on the monotone h0
    left, right = -hi - 1, -lo  # h0(left) = 0, h0(right) > 0
    while right - left > 1:
        mid = (left + right) // 2
        if h0(mid) == 0:
            left = mid
        else:
            right = mid
    values = {left: 0}
    t, rank = left, 5
    while True:
        t += 1
        values[t] = h0(t)
        if values[t] - values[t - 1] == rank:
            break
    T = type_from_h0(values, rank)
    assert T.degree == 4 * x.b - x.k - 6, "splitting type has the wrong degree"
    return T
