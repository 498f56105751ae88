"""Direct sums of line bundles on the projective line.

A bundle ``O(a_1) + ... + O(a_r)`` is stored as its splitting type, the
sorted tuple ``(a_1, ..., a_r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def h0_line(m: int) -> int:
    """``h^0(P^1, O(m))``."""
    return max(0, m + 1)


def h1_line(m: int) -> int:
    """``h^1(P^1, O(m))``."""
    return max(0, -m - 1)


@dataclass(frozen=True, order=True)
class SplittingType:
    alphas: tuple[int, ...]

    def __init__(self, alphas: Iterable[int]):
        alphas = tuple(sorted(int(a) for a in alphas))
        if not alphas:
            raise ValueError("a splitting type needs rank >= 1")
        object.__setattr__(self, "alphas", alphas)

    @property
    def rank(self) -> int:
        return len(self.alphas)

    @property
    def degree(self) -> int:
        return sum(self.alphas)

    def twist(self, t: int) -> "SplittingType":
        return SplittingType(a + t for a in self.alphas)

    def dual(self) -> "SplittingType":
        return SplittingType(-a for a in self.alphas)

    def merge(self, other: "SplittingType") -> "SplittingType":
        """Splitting type of the direct sum."""
        return SplittingType(self.alphas + other.alphas)

    def is_balanced(self) -> bool:
        return self.alphas[-1] - self.alphas[0] <= 1

    def __iter__(self):
        return iter(self.alphas)

    def __len__(self):
        return len(self.alphas)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.alphas) + ")"


def splitting_cohomology(T: SplittingType, t: int = 0) -> tuple[int, int]:
    """Return ``(h0, h1)`` of ``T`` twisted by ``O(t)``."""
    h0 = sum(h0_line(a + t) for a in T.alphas)
    h1 = sum(h1_line(a + t) for a in T.alphas)
    return h0, h1


def balanced_partition(degree: int, rank: int) -> SplittingType:
    """The rank-``rank`` splitting type of total ``degree`` whose parts differ by
    at most one.

    Writing ``degree = rank*h + eps`` with ``0 <= eps < rank`` gives
    ``rank - eps`` parts equal to ``h`` and ``eps`` parts equal to ``h + 1``.

    >>> balanced_partition(3, 5)
    SplittingType(alphas=(0, 0, 1, 1, 1))
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    h, eps = divmod(degree, rank)
    return SplittingType([h] * (rank - eps) + [h + 1] * eps)


def pushforward_scroll_bundle(b: int, k: int) -> tuple[SplittingType, SplittingType]:
    """Splitting types of ``pi_* A`` (rank 3) and ``pi_* B`` (rank 2) for the
    family with ``c1 = 3C0 + bf``, ``c2 = k`` on ``F_1``.

    ``pi_* E`` is an extension of the second by the first.
    """
    sub = SplittingType([2 * b - k - 2, 2 * b - k - 3, 2 * b - k - 4])
    quot = SplittingType([k - b + 2, k - b + 1])
    return sub, quot


def type_from_h0(values: dict[int, int], rank: int) -> SplittingType:
    """Recover a splitting type from ``t -> h0(T(t))``.

    ``values`` must cover a run of consecutive twists starting at one where
    ``h0`` vanishes and ending at one where all ``rank`` summands are already
    globally generated. The jump ``h0(t) - h0(t-1)`` counts summands with
    ``a >= -t``.
    """
    ts = sorted(values)
    if values[ts[0]] != 0:
        raise ValueError("the first twist must have h0 = 0")
    alphas: list[int] = []
    prev_jump = 0
    for t0, t1 in zip(ts, ts[1:]):
        if t1 != t0 + 1:
            raise ValueError("twists must be consecutive")
        jump = values[t1] - values[t0]
        if jump < prev_jump:
            raise ValueError("h0 values are not convex in the twist")
        alphas.extend([-t1] * (jump - prev_jump))
        prev_jump = jump
    if len(alphas) != rank:
        raise ValueError(f"recovered {len(alphas)} summands, expected {rank}")
    return SplittingType(alphas)
