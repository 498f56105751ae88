"""Line-bundle cohomology on F_e against an independent toric computation."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hirzscroll.divisors import (
    C0,
    F1,
    FIBRE,
    CohomologyTriple,
    DivisorClass,
    Surface,
    canonical_class,
    chi_divisor,
    classify_divisor,
    cohomology_divisor,
    intersect,
    pushforward_line_bundle,
)


def toric_cohomology(a: int, b: int, e: int) -> tuple[int, int, int]:
    # rays v1=(1,0), v2=(0,1), v3=(-1,e), v4=(0,-1); D1 ~ D3 ~ f, D2 = C0
    rays = np.array([(1, 0), (0, 1), (-1, e), (0, -1)])
    d = np.array([b, a, 0, 0])
    R = (e + 2) * (abs(a) + abs(b)) + 4
    m1, m2 = np.meshgrid(np.arange(-R, R + 1), np.arange(-R, R + 1), indexing="ij")
    pair = m1[..., None] * rays[:, 0] + m2[..., None] * rays[:, 1]
    neg = pair < -d  # rays in the complex V_{D,m}
    count = neg.sum(axis=-1)
    # components of a proper nonempty subset of the 4-cycle = number of run ends
    ends = (neg & ~np.roll(neg, -1, axis=-1)).sum(axis=-1)
    h0 = int((count == 0).sum())
    h2 = int((count == 4).sum())
    h1 = int(np.where((count > 0) & (count < 4), ends - 1, 0).sum())
    return h0, h1, h2


@pytest.mark.parametrize("a, b", [(0, 0), (1, 0), (2, 0), (1, -11), (-2, 0), (-3, 2), (2, -3), (1, 8), (-1, 5)])
def test_matches_toric(surface, a, b):
    h = cohomology_divisor(DivisorClass(a, b), surface)
    assert (h.h0, h.h1, h.h2) == toric_cohomology(a, b, surface.e)


@settings(max_examples=60, deadline=None)
@given(st.integers(-7, 7), st.integers(-10, 10), st.integers(0, 3))
def test_matches_toric_random(a, b, e):
    h = cohomology_divisor(DivisorClass(a, b), Surface(e))
    assert (h.h0, h.h1, h.h2) == toric_cohomology(a, b, e)


@pytest.mark.parametrize("div, want", [((2, 0), (1, 1, 0)), ((0, 0), (1, 0, 0)), ((1, -11), (0, 21, 0))])
def test_known_values(div, want):
    assert cohomology_divisor(DivisorClass(*div)) == CohomologyTriple(*want)


def test_intersection_numbers(surface):
    e = surface.e
    assert intersect(C0, C0, surface) == -e
    assert intersect(C0, FIBRE, surface) == 1
    assert intersect(FIBRE, FIBRE, surface) == 0
    K = canonical_class(surface)
    assert (K.a, K.b) == (-2, -e - 2)
    assert intersect(K, K, surface) == 8


@given(st.integers(-15, 15), st.integers(-15, 15), st.integers(0, 3))
def test_serre_duality_and_riemann_roch(a, b, e):
    S = Surface(e)
    D = DivisorClass(a, b)
    h = cohomology_divisor(D, S)
    assert cohomology_divisor(canonical_class(S) - D, S) == h.reversed()
    assert h.chi == chi_divisor(D, S)
    assert min(h.h0, h.h1, h.h2) >= 0


@given(st.integers(-10, 10), st.integers(-10, 10))
def test_pushforward_degrees(a, b):
    T = pushforward_line_bundle(DivisorClass(a, b), F1)
    if a < 0:
        assert T is None
    else:
        assert T.alphas == tuple(sorted(b - j for j in range(a + 1)))


def test_minus_one_times_c0_is_acyclic(surface):
    for b in range(-6, 7):
        assert cohomology_divisor(DivisorClass(-1, b), surface) == CohomologyTriple(0, 0, 0)


@given(st.integers(-8, 8), st.integers(-12, 12), st.integers(0, 3))
def test_positivity(a, b, e):
    S = Surface(e)
    D = DivisorClass(a, b)
    rep = classify_divisor(D, S)
    assert rep.effective == rep.cone_effective
    if rep.ample:
        assert rep.nef and rep.effective and rep.very_ample
        assert intersect(D, C0, S) > 0 and intersect(D, FIBRE, S) > 0
    if rep.nef:
        assert intersect(D, C0, S) >= 0 and intersect(D, FIBRE, S) >= 0


def test_algebra_and_parsing():
    D = DivisorClass.parse("3,-5")
    assert D == DivisorClass(3, -5)
    assert str(D) == "3C0-5f" and str(DivisorClass(2, 0)) == "2C0"
    assert D + C0 - FIBRE == DivisorClass(4, -6)
    assert -D == DivisorClass(-3, 5) and D * 2 == DivisorClass(6, -10)
    with pytest.raises(ValueError):
        DivisorClass.parse("3")
    with pytest.raises(ValueError):
        Surface(-1)


def test_as_dict_has_chi():
    assert CohomologyTriple(1, 1, 0).as_dict() == {"h0": 1, "h1": 1, "h2": 0, "chi": 0}
