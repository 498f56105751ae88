import pytest

from hirzscroll import scroll
from hirzscroll.divisors import F1, DivisorClass, cohomology_divisor, intersect
from hirzscroll.scroll import ConsistencyError, ParameterError, ScrollFamily


@pytest.mark.parametrize("e", [0, 1, 2])
@pytest.mark.parametrize("b, k", [(3, 7), (5, 11), (6, 8), (4, 4)])
def test_family_classes(e, b, k):
    fam = ScrollFamily(b, k, e)
    assert fam.A + fam.B == DivisorClass(3, b)
    assert intersect(fam.A, fam.B, fam.surface) == k


def test_f1_classes():
    fam = ScrollFamily(5, 11)
    assert fam.A == DivisorClass(2, -3) and fam.B == DivisorClass(1, 8)
    assert fam.chi_E() == 8


def test_regimes():
    r = scroll.validate_family(5, 11)
    assert r.meets_ass_3_1 and r.meets_ass_5_1 and not r.split_regime and r.thm_van_case == "ii"
    r = scroll.validate_family(4, 4)
    assert r.meets_ass_3_1 and not r.meets_ass_5_1 and r.thm_van_case == "i"
    assert scroll.validate_family(5, 20).thm_van_case == "out-of-range"
    with pytest.raises(ParameterError):
        scroll.require_ass_5_1(4, 4)
    with pytest.raises(ParameterError):
        scroll.h1_A(5, 4)


@pytest.mark.parametrize("b, k, h1A", [(5, 7, 0), (5, 8, 1), (5, 9, 3), (5, 11, 9)])
def test_h1_A(b, k, h1A):
    assert scroll.h1_A(b, k) == h1A


@pytest.mark.parametrize("b, k, dim", [(5, 5, 0), (5, 6, 1), (6, 7, 0), (5, 11, 21), (5, 8, 9)])
def test_dim_ext1(b, k, dim):
    assert scroll.dim_ext1(b, k) == dim


@pytest.mark.parametrize("b, k, dim", [(5, 5, 5), (5, 11, 1), (6, 7, 3)])
def test_end_dim(b, k, dim):
    assert scroll.end_dim(b, k) == dim


@pytest.mark.parametrize("b, k", [(b, k) for b in range(4, 10) for k in range(b, 2 * b)])
def test_split_end_dim_matches_hom_spaces(b, k):
    fam = ScrollFamily(b, k)
    if 2 * k < 3 * b - 3:
        exact = 2 + cohomology_divisor(fam.A - fam.B).h0 + cohomology_divisor(fam.B - fam.A).h0
        assert scroll.end_dim(b, k) == exact


@pytest.mark.parametrize("b, k, want", [(5, 19, True), (5, 20, False), (5, 5, True)])
def test_h0B_ge_h1A(b, k, want):
    assert scroll.check_h0B_ge_h1A(b, k) is want


def test_cohomology_table():
    t = scroll.cohomology_table(5, 11)
    assert (t.h0A, t.h1A, t.h0B, t.h0E_generic, t.h1E_generic) == (0, 9, 17, 8, 0)
    t = scroll.cohomology_table(5, 20)
    assert not t.covered and t.h0E_generic is None


def test_table_detects_wrong_closed_form(monkeypatch):
    monkeypatch.setattr(scroll, "h0_B", lambda b, k: 2 * k - 2 * b + 4)
    with pytest.raises(ConsistencyError):
        scroll.cohomology_table(5, 11)


def test_embedding_dim_and_degree():
    assert (scroll.embedding_dim(5, 11), scroll.degree(5, 11)) == (7, 10)
    assert (scroll.embedding_dim(6, 10), scroll.degree(6, 10)) == (12, 17)
    assert intersect(DivisorClass(3, 5), DivisorClass(3, 5), F1) - 11 == 10
