"""Dimension counts for the Hilbert-scheme component of the scrolls.

``expected_dim`` is ``chi(N) = n(n+1) + 3k - 2b - 2``; ``dim_Y_lower_bound``
counts parameters for the locus of scrolls ``P(E)``:

    tau + dim PGL(n+1) - dim Aut(X),   dim Aut(X) = h^0(E (x) E^dual) + 5,

where ``tau`` is the dimension of the space of weak isomorphism classes of
extensions. The two agree exactly when ``n = 4b - k - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from hirzscroll import chow
from hirzscroll import scroll
from hirzscroll.divisors import F0, cohomology_divisor
from hirzscroll.scroll import ConsistencyError, ParameterError, ScrollFamily


@dataclass(frozen=True)
class HilbertReport:
    b: int
    k: int
    n: int
    d: int
    g: int
    dim_component: int
    chi_normal: int
    tau: int
    end_dim: int
    aut_dim: int
    dim_Y_lower: int

    @property
    def consistent(self) -> bool:
        return self.dim_Y_lower == self.dim_component

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["consistent"] = self.consistent
        return out


def expected_dim(b: int, k: int) -> int:
    scroll.require_ass_5_1(b, k)
    n = scroll.embedding_dim(b, k)
    return n * (n + 1) + 3 * k - 2 * b - 2


def tau(b: int, k: int) -> int:
    """Dimension of ``P(Ext^1(B, A))``, or 0 when only the split bundle exists."""
    if 2 * k < 3 * b - 3:
        return 0
    return 4 * k - 6 * b + 6


def dim_Y_lower_bound(b: int, k: int) -> int:
    scroll.require_ass_5_1(b, k)
    n = scroll.embedding_dim(b, k)
    return tau(b, k) + n * (n + 2) - scroll.end_dim(b, k) - 5


def hilbert_report(b: int, k: int) -> HilbertReport:
    fam = ScrollFamily(b, k)
    inv = chow.numerical_invariants(fam)
    chi = chow.chi_normal(fam)
    dim = expected_dim(b, k)
    if chi != dim:
        raise ConsistencyError(f"chi(N) = {chi} but expected dimension {dim}")
    end = scroll.end_dim(b, k)
    return HilbertReport(
        b=b,
        k=k,
        n=inv.n,
        d=inv.d,
        g=inv.g,
        dim_component=dim,
        chi_normal=chi,
        tau=tau(b, k),
        end_dim=end,
        aut_dim=end + 5,
        dim_Y_lower=dim_Y_lower_bound(b, k),
    )


@dataclass(frozen=True)
class TableRow:
    d: int
    g: int
    n: int
    c1: str
    c2: int
    dim: int

    def as_tuple(self) -> tuple:
        return (self.d, self.g, self.n, self.c1, self.c2, self.dim)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def table_row(b: int, k: int) -> TableRow:
    scroll.require_ass_5_1(b, k)
    rep = hilbert_report(b, k)
    return TableRow(rep.d, rep.g, rep.n, f"3C0+{b}f", k, rep.dim_component)


@dataclass(frozen=True)
class F0Report:
    k: int
    d: int
    n: int
    dim_component: int
    dim_proj_ext: int
    dim_Y_lower: int
    chi_normal: int
    identity_holds: bool
    n_in_quoted_range: bool  # whether 7 <= n <= 10, the range quoted for these scrolls

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def f0_invariants(k: int) -> F0Report:
    """Scrolls over the quadric ``F_0`` with ``c1 = 3C0 + 3f``, ``c2 = k``."""
    if not 7 <= k <= 10:
        raise ParameterError(f"k = {k} outside 7..10")
    d = 18 - k
    n = 16 - k
    dim = (20 - k) * (n - 3) - 3 * n + 49
    dim_proj_ext = 4 * k - 21
    fam = ScrollFamily(3, k, e=0)
    exact = cohomology_divisor(fam.A - fam.B, F0).h1 - 1
    if exact != dim_proj_ext:
        raise ConsistencyError(f"dim P(Ext^1) = {exact} by exact cohomology, formula {dim_proj_ext}")
    if fam.chi_E() - 1 != n or chow.numerical_invariants(fam).d != d:
        raise ConsistencyError("F_0 degree or embedding dimension disagrees with the Chow ring")
    chi = chow.chi_normal(fam)
    # weak isomorphism classes of extensions + PGL - (h^0(E (x) E^dual) + 5), h^0 = 1
    lower = dim_proj_ext + n * (n + 2) - 1 - 5
    return F0Report(
        k=k,
        d=d,
        n=n,
        dim_component=dim,
        dim_proj_ext=dim_proj_ext,
        dim_Y_lower=lower,
        chi_normal=chi,
        identity_holds=(n * (n + 2) - 27 + 4 * k == dim) and lower == dim,
        n_in_quoted_range=7 <= n <= 10,
    )
