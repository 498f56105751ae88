"""Exact matrix rank over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of the input, so the divisions are
    exact and no rationals appear.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col + 1, n_cols):
                row_r[c] = (p * row_r[c] - factor * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank


def rational_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of a rational matrix; each row is scaled to integers first."""
    int_rows = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        int_rows.append([int(Fraction(x) * den) for x in row])
    return integer_rank(int_rows)


@dataclass
class RationalMatrix:
    """Dense exact matrix with labelled rows and columns."""

    rows: list[list[Fraction]]
    row_labels: list[str] = field(default_factory=list)
    col_labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.rows and any(len(r) != len(self.col_labels) for r in self.rows):
            raise ValueError("row length does not match the column labels")
        if len(self.rows) != len(self.row_labels):
            raise ValueError("number of rows does not match the row labels")

    @classmethod
    def zeros(cls, row_labels: list[str], col_labels: list[str]) -> "RationalMatrix":
        rows = [[Fraction(0)] * len(col_labels) for _ in row_labels]
        return cls(rows, list(row_labels), list(col_labels))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def rank(self) -> int:
        if not self.rows or not self.col_labels:
            return 0
        return rational_rank(self.rows)

    def nullity(self) -> int:
        return self.shape[1] - self.rank()

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def scaled(self, c: Fraction | int) -> "RationalMatrix":
        return RationalMatrix(
            [[c * x for x in r] for r in self.rows],
            list(self.row_labels),
            list(self.col_labels),
        )
