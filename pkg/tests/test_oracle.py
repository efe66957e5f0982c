import warnings
from fractions import Fraction

import mpmath
import pytest

from hhsum import config
from hhsum.approx import to_mpf
from hhsum.closed_forms import SumSpec
from hhsum.errors import DomainError
from hhsum.verification.oracle import (
    OracleWarning,
    exact_term,
    oracle_partial_sum,
    oracle_series,
    raw_partial_sums,
)

POS = SumSpec("linear", 2, 2, 3, 2, False)
ALT = SumSpec("linear", 1, 2, 3, 2, True)
QUAD = SumSpec("quadratic", 1, 1, 3, 2, False, 1, 1)


def test_first_partial_sum():
    assert oracle_partial_sum(POS, 1) == Fraction(1, 3)


def test_exact_term_sign():
    assert exact_term(ALT, 2) < 0 < exact_term(ALT, 1)
    with pytest.raises(DomainError):
        exact_term(POS, 0)


def test_converged_values():
    v = oracle_series(POS, 1e-8)
    # the commonly quoted 0.4046 is 5e-4 low; direct summation gives 0.405085...
    assert abs(v.value - mpmath.mpf("0.405085116107")) < 1e-11
    assert v.err < 1e-15
    a = oracle_series(ALT, 1e-8)
    assert abs(a.value - mpmath.mpf("0.292769232583")) < 1e-11


@pytest.mark.parametrize("spec", [POS, QUAD, SumSpec("linear", 1, 1, 1, 1, False)], ids=lambda s: s.id)
def test_positive_partials_increase_and_stay_below(spec):
    ns = list(range(1, 60)) + [200, 1000]
    ps = raw_partial_sums(spec, ns)
    vals = [ps[n] for n in ns]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    v = oracle_series(spec, 1e-8)
    assert all(p <= v.value + v.err for p in vals)


@pytest.mark.parametrize("spec", [ALT, SumSpec("quadratic", 2, 1, 2, 3, True, 1, 2)], ids=lambda s: s.id)
def test_alternating_bracketed(spec):
    v = oracle_series(spec, 1e-8).value
    ps = raw_partial_sums(spec, range(1, 80))
    for n in range(1, 79):
        lo, hi = sorted((ps[n], ps[n + 1]))
        assert lo <= v <= hi


@pytest.mark.parametrize("spec", [POS, QUAD], ids=lambda s: s.id)
def test_tail_soundness(spec):
    # the estimated tail beyond N is consistent with the exact partial sum to 4N
    v = oracle_series(spec, 1e-8)
    N = 500
    ps = raw_partial_sums(spec, [N, 4 * N])
    assert ps[4 * N] <= v.value + v.err
    assert v.value - ps[4 * N] < v.value - ps[N]


def test_budget_exhaustion_warns():
    with pytest.warns(OracleWarning):
        v = oracle_series(SumSpec("linear", 1, 1, 1, 1, False), 1e-30, max_terms=300)
    assert v.err > 1e-30
    assert v.terms <= 300


def test_invalid_budget():
    with pytest.raises(DomainError):
        oracle_series(POS, 1e-8, max_terms=0)


def test_precision_change_is_consistent():
    lo = oracle_series(POS, 1e-8)
    config.configure(precision_digits=40)
    hi = oracle_series(POS, 1e-8)
    assert lo.agrees(hi)
