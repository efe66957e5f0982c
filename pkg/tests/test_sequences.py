from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hhsum.sequences import (
    coeff_table,
    harmonic,
    harmonic_alt,
    hyperharmonic,
    hyperharmonic_row,
    hyperharmonic_via_coeffs,
)


@pytest.mark.parametrize(
    "n,p,want", [(4, 1, Fraction(25, 12)), (3, 2, Fraction(49, 36)), (3, -2, 14), (0, 3, 0), (5, 0, 5)]
)
def test_harmonic(n, p, want):
    assert harmonic(n, p) == want


@pytest.mark.parametrize("n,m,want", [(3, 1, Fraction(5, 6)), (1, 7, 1), (4, 2, Fraction(115, 144))])
def test_harmonic_alt(n, m, want):
    assert harmonic_alt(n, m) == want


@pytest.mark.parametrize("n,p,r,want", [(3, 1, 2, Fraction(13, 3)), (2, 2, 2, Fraction(9, 4))])
def test_hyperharmonic_values(n, p, r, want):
    assert hyperharmonic(n, p, r) == want


@given(st.integers(0, 40), st.integers(1, 4))
def test_hyperharmonic_order_one_is_harmonic(n, p):
    assert hyperharmonic(n, p, 1) == harmonic(n, p)


@given(st.integers(1, 30), st.integers(1, 3), st.integers(2, 4))
def test_hyperharmonic_recursion(n, p, r):
    assert hyperharmonic(n, p, r) == hyperharmonic(n - 1, p, r) + hyperharmonic(n, p, r - 1)


def test_row_matches_pointwise():
    row = hyperharmonic_row(12, 2, 3)
    assert row == [hyperharmonic(n, 2, 3) for n in range(13)]


def test_coeff_table_initial_orders():
    assert coeff_table(1).as_dict() == {(0, 0): 1}
    assert coeff_table(2).as_dict() == {(0, 0): 1, (0, 1): 1, (1, 0): -1}


def test_coeff_table_order_three():
    t = coeff_table(3).as_dict()
    assert t == {
        (0, 0): 1,
        (0, 1): Fraction(3, 2),
        (0, 2): Fraction(1, 2),
        (1, 0): Fraction(-3, 2),
        (1, 1): -1,
        (2, 0): Fraction(1, 2),
    }


@pytest.mark.parametrize("r", range(1, 6))
def test_coeff_table_shape(r):
    keys = set(coeff_table(r).as_dict())
    assert keys == {(m, j) for m in range(r) for j in range(r - m)}


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("p", range(1, 5))
def test_decomposition_exact(r, p):
    for n in range(51):
        assert hyperharmonic_via_coeffs(n, p, r) == hyperharmonic(n, p, r)


def test_via_coeffs_examples():
    assert hyperharmonic_via_coeffs(2, 2, 2) == Fraction(9, 4)
    assert hyperharmonic_via_coeffs(5, 1, 3) == hyperharmonic(5, 1, 3)


@pytest.mark.parametrize("bad", [(-1, 1, 1), (3, 0, 1), (3, 1, 0)])
def test_hyperharmonic_domain(bad):
    with pytest.raises(ValueError):
        hyperharmonic_row(*bad)
