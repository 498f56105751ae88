from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hirzscroll import cech, p1, scroll
from hirzscroll.cech import (
    Cocycle,
    LaurentMonomial,
    Section,
    StructuredExtension,
    coboundary_matrix,
    cup_product,
    cup_with_section,
    extension_cohomology,
    generic_extension_cohomology,
    h1_basis,
    sample_extension,
    sample_section,
    splitting_type_of_extension,
)


def mono(p, q, c=1):
    return Cocycle(p + q, {LaurentMonomial(p, q): Fraction(c)})


def test_h1_basis():
    assert h1_basis(-4) == [LaurentMonomial(-1, -3), LaurentMonomial(-2, -2), LaurentMonomial(-3, -1)]
    assert h1_basis(-1) == [] and h1_basis(2) == []
    for m in range(-8, 3):
        assert len(h1_basis(m)) == p1.h1_line(m)


def test_cup_product_examples():
    s2 = Section.monomial(2, 0)
    assert cup_product(s2, mono(-3, -1)) == mono(-1, -1)
    assert cup_product(s2, mono(-1, -3)).is_zero()
    c = Cocycle.from_vector(-5, [3, -1, 0, 7])
    assert cup_product(Section.monomial(0, 0), c) == c


@given(st.integers(0, 4), st.integers(0, 4), st.integers(-8, -2))
def test_cup_product_is_bilinear(i, j, m):
    deg = i + j
    c = Cocycle.from_vector(m, range(1, p1.h1_line(m) + 1))
    s = Section.monomial(i, j)
    assert cup_product(s, c.scaled(3)) == cup_product(s, c).scaled(3)
    assert cup_product(s, c + c) == cup_product(s, c) + cup_product(s, c)
    assert cup_product(s, c).degree == deg + m


@pytest.mark.parametrize("b, k, shape", [(5, 9, (3, 13)), (5, 11, (9, 17))])
def test_coboundary_shape(b, k, shape):
    M = coboundary_matrix(sample_extension(b, k, seed=3))
    assert M.shape == shape
    assert coboundary_matrix(StructuredExtension.zero(b, k)).is_zero()


@pytest.mark.parametrize("b, k, slots", [(5, 11, 21), (5, 5, 0), (5, 8, 9)])
def test_sample_slots(b, k, slots):
    x = sample_extension(b, k, seed=7, coeff_bound=10)
    assert len(x.to_vector()) == slots == scroll.dim_ext1(b, k)
    assert all(abs(v) <= 10 for v in x.to_vector())


def test_sampling_is_deterministic():
    assert sample_extension(5, 11, seed=1) == sample_extension(5, 11, seed=1)
    assert sample_extension(5, 11, seed=1) != sample_extension(5, 11, seed=2)
    assert sample_extension(5, 11, seed=1, trial=0) != sample_extension(5, 11, seed=1, trial=1)


def test_extension_cohomology_examples():
    assert extension_cohomology(StructuredExtension.zero(5, 9)) == (13, 3)
    assert extension_cohomology(StructuredExtension.zero(5, 5)) == (14, 0)


@pytest.mark.parametrize("b, k, seed, trials, want", [
    (5, 9, 1, 5, (10, 0)),
    (5, 7, 0, 1, (12, 0)),
    (5, 11, 1, 5, (8, 0)),
    (5, 5, 0, 5, (14, 0)),
    (5, 8, 0, 5, (11, 0)),
])
def test_generic_cohomology(b, k, seed, trials, want):
    h0, h1, cert = generic_extension_cohomology(b, k, trials=trials, seed=seed)
    assert (h0, h1) == want
    assert cert.certified and cert.trials_used <= trials


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 8).flatmap(lambda b: st.tuples(st.just(b), st.integers(b, 4 * b - 1))),
       st.integers(0, 2**32), st.integers(-3, 3).filter(bool))
def test_euler_characteristic_and_scaling(bk, seed, c):
    b, k = bk
    x = sample_extension(b, k, seed=seed, coeff_bound=5)
    h0, h1 = extension_cohomology(x)
    assert h0 - h1 == scroll.ScrollFamily(b, k).chi_E()
    # nonzero multiples give isomorphic bundles
    assert extension_cohomology(x.scaled(c)) == (h0, h1)
    # semicontinuity: the split bundle has at least as much cohomology
    z0, z1 = extension_cohomology(StructuredExtension.zero(b, k))
    assert z0 >= h0 and z1 >= h1


def test_twist_preserves_euler_characteristic():
    x = sample_extension(5, 11, seed=0)
    for t in range(-4, 4):
        h0, h1 = extension_cohomology(x, t)
        assert h0 - h1 == 8 + 5 * t


def test_unstructured_mode():
    assert cech.unstructured_ext_dim(5, 11) == 63
    h0, h1, cert = generic_extension_cohomology(5, 11, seed=1, structured=False)
    assert (h0, h1) == (8, 0) and not cert.structured
    assert splitting_type_of_extension(cech.sample_unstructured_extension(5, 11, seed=1)) == p1.SplittingType([0, 0, 1, 1, 1])


@pytest.mark.parametrize("k", [9, 11])
def test_cup_with_generic_section(k):
    sigma = sample_section(5, k, seed=0)
    M = cup_with_section(5, k, sigma)
    assert M.rank() == scroll.h1_A(5, k)
    assert M.nullity() == k + 1


def test_cup_with_monomial_section():
    sigma = (Section.monomial(8, 0), Section.from_vector(7, [0] * 8))
    assert cup_with_section(5, 11, sigma).rank() <= 9
    with pytest.raises(ValueError):
        cup_with_section(5, 11, (Section.from_vector(8, [0] * 9), Section.from_vector(7, [0] * 8)))
    with pytest.raises(ValueError):
        cup_with_section(5, 11, (Section.monomial(2, 0), Section.monomial(1, 0)))


@pytest.mark.parametrize("k, want", [(9, (1, 1, 1, 1, 1)), (11, (0, 0, 1, 1, 1))])
def test_generic_splitting_type(k, want):
    assert splitting_type_of_extension(sample_extension(5, k, seed=1)).alphas == want


@pytest.mark.parametrize("b, k", [(5, 5), (5, 9), (5, 11), (6, 14), (4, 8)])
def test_zero_class_splits_as_sum(b, k):
    sub, quot = p1.pushforward_scroll_bundle(b, k)
    assert splitting_type_of_extension(StructuredExtension.zero(b, k)) == sub.merge(quot)


def test_degree_validation():
    with pytest.raises(ValueError):
        StructuredExtension(5, 11, Cocycle.zero(-3), Cocycle.zero(-4))
    with pytest.raises(ValueError):
        sample_extension(5, 11, coeff_bound=0)
    with pytest.raises(ValueError):
        generic_extension_cohomology(5, 11, trials=0)
