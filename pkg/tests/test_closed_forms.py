import warnings
from fractions import Fraction

import mpmath
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from hhsum.closed_forms import (
    SumSpec,
    closed_linear,
    closed_quadratic,
    closed_value,
    quadratic_base,
    recip_binomial_weights,
    s_boundary,
    s_closed,
    shift_sum,
    t_boundary,
    t_closed,
)
from hhsum.constants import zeta, zeta_alt
from hhsum.errors import DomainError
from hhsum.euler_sums import linear_euler, quadratic_euler
from hhsum.exact import binomial
from hhsum.verification.oracle import oracle_series

TOL = 1e-8
z = lambda s: zeta(s).value  # noqa: E731


def series(term, alt, N=None):
    """Accelerated or extrapolation-free check value for a one-off block series."""
    from hhsum.acceleration import accelerated_alternating

    if alt:
        return accelerated_alternating(term, 60, offset=10)
    raise AssertionError("only alternating blocks are summed here")


# -- weights -----------------------------------------------------------------------

def test_weights_small():
    assert recip_binomial_weights(1) == [(1, 1)]
    assert recip_binomial_weights(2) == [(1, 2), (2, -2)]


@pytest.mark.parametrize("k", range(1, 13))
def test_weights_partial_fraction_exact(k):
    w = recip_binomial_weights(k)
    for n in range(1, 101):
        assert sum(c / Fraction(n + r) for r, c in w) == Fraction(1, binomial(n + k, k))


# -- building blocks -----------------------------------------------------------------

@pytest.mark.parametrize("s", range(1, 5))
def test_shift_sum_a1_is_zeta(s):
    assert abs(shift_sum(s, 1).value - z(s + 1)) < 1e-10


def test_shift_sum_examples():
    assert abs(shift_sum(1, 2).value - (z(2) + 1)) < 1e-30
    # zeta(3) - 1 + zeta(2): the H_1^(1) zeta(2) term is present
    assert abs(shift_sum(2, 2).value - (z(3) - 1 + z(2))) < 1e-30


def test_s_closed_examples():
    assert abs(s_closed(1, 2, 1, False).value - (2 * z(3) - z(2))) < 1e-30
    assert abs(s_closed(1, 2, 1, False).value - mpmath.mpf("0.7591797")) < 1e-7
    assert abs(s_closed(0, 3, 1, False).value - (z(2) - 1)) < 1e-30


def test_s_closed_alternating_m1():
    # sum (-1)^(n+1) H_n / (n (n+1)) = zeta(2)/2 - log^2 2
    want = z(2) / 2 - mpmath.log(2) ** 2
    assert abs(s_closed(1, 1, 1, True).value - want) < 1e-30


def test_s_boundary_values():
    assert abs(s_boundary(1, 1).value - mpmath.log(2) ** 2 / 2) < 1e-8
    assert abs(s_boundary(1, 1).value - mpmath.mpf("0.2402265")) < 1e-7
    base = zeta_alt(3) - linear_euler(2, 1, "+", "-")
    assert s_boundary(2, 1).agrees(base, 1e-30)


@pytest.mark.parametrize("p,r", [(1, 3), (2, 2), (3, 4)])
def test_s_boundary_against_series(p, r):
    from hhsum.sequences import harmonic
    from hhsum.approx import to_mpf

    want = series(lambda n: to_mpf(harmonic(n, p)) / (n + r), True)
    assert s_boundary(p, r).agrees(want, 1e-20)


def test_quadratic_base_values():
    assert abs(quadratic_base(1, 1, 1).value - 3 * z(3)) < 1e-8
    want = linear_euler(1, 3) + linear_euler(2, 2) - zeta(4)
    assert quadratic_base(1, 2, 1).agrees(want, 1e-25)


def test_t_boundary_values():
    want = -quadratic_euler(1, 1, 1, "-") + 2 * linear_euler(1, 2, "+", "-") - zeta_alt(3)
    assert t_boundary(1, 1, 1).agrees(want, 1e-30)
    assert t_boundary(2, 1, 1).agrees(t_boundary(1, 2, 1), 1e-30)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_t_boundary_against_series(r):
    from hhsum.sequences import harmonic
    from hhsum.approx import to_mpf

    want = series(lambda n: to_mpf(harmonic(n, 1)) ** 2 / (n + r), True)
    assert t_boundary(1, 1, r).agrees(want, 1e-20)


def test_t_closed_single_factor_power():
    # H^(0)_n = n cancels one power of n
    assert t_closed(1, 0, 3, 2, False).agrees(s_closed(1, 2, 2, False), 1e-30)


def test_block_hypotheses():
    with pytest.raises(DomainError, match="requires"):
        s_closed(-2, 3, 1, False)
    with pytest.raises(DomainError):
        s_closed(1, 0, 1, False)


# -- full series ---------------------------------------------------------------------

def test_spec_validation():
    with pytest.raises(DomainError, match="m ≥ s violated"):
        SumSpec("linear", 1, 3, 2, 1)
    with pytest.raises(DomainError, match="m ≥ s1\\+s2-1 violated"):
        SumSpec("quadratic", 1, 2, 1, 1, False, 1, 2)
    with pytest.raises(DomainError):
        SumSpec("linear", 0, 1, 2, 1)
    with pytest.raises(DomainError):
        SumSpec("quadratic", 1, 1, 2, 1)
    with pytest.raises(DomainError):
        SumSpec("cubic", 1, 1, 2, 1)


def test_spec_ids():
    assert SumSpec("linear", 2, 2, 3, 2).id == "linear-pos(p=2,s=2,m=3,k=2)"
    q = SumSpec("quadratic", 1, 2, 4, 2, True, 2, 1)
    assert q.id == "quadratic-alt(p1=1,s1=2,p2=2,s2=1,m=4,k=2)"
    assert q.swapped().swapped() == q


def test_linear_degenerate_example():
    v = closed_linear(SumSpec("linear", 1, 1, 2, 1))
    assert abs(v.value - (2 * z(3) - z(2))) < 1e-30


def test_quadratic_singleton_tables():
    v = closed_quadratic(SumSpec("quadratic", 1, 1, 2, 1, False, 1, 1))
    assert v.agrees(t_closed(1, 1, 2, 1, False), 1e-30)


@pytest.mark.parametrize("p,m,k,alt", [(1, 2, 3, False), (2, 1, 2, True), (3, 4, 4, False), (1, 1, 4, True)])
def test_s1_degeneracy(p, m, k, alt):
    direct = sum((w * s_closed(p, m, r, alt) for r, w in recip_binomial_weights(k)), start=0)
    v = closed_linear(SumSpec("linear", p, 1, m, k, alt))
    assert abs(v.value - direct.value) <= v.err + direct.err


def test_kind_mismatch():
    with pytest.raises(DomainError):
        closed_linear(SumSpec("quadratic", 1, 1, 2, 1, False, 1, 1))
    with pytest.raises(DomainError):
        closed_quadratic(SumSpec("linear", 1, 1, 2, 1))


def _oracle(spec):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return oracle_series(spec, TOL)


@pytest.mark.parametrize(
    "spec",
    [
        SumSpec("linear", 2, 2, 3, 2, False),
        SumSpec("linear", 1, 2, 3, 2, True),
        SumSpec("linear", 2, 2, 3, 2, True),
        SumSpec("linear", 1, 3, 3, 1, False),
        SumSpec("linear", 3, 3, 6, 4, True),
        SumSpec("quadratic", 1, 1, 3, 2, False, 1, 1),
        SumSpec("quadratic", 1, 2, 4, 2, True, 2, 1),
        SumSpec("quadratic", 2, 2, 3, 1, False, 3, 1),
        SumSpec("quadratic", 3, 2, 5, 3, True, 1, 3),
    ],
    ids=lambda s: s.id,
)
def test_against_oracle(spec):
    assert closed_value(spec).agrees(_oracle(spec), 1e-6)


def test_example_values():
    v1 = closed_value(SumSpec("linear", 2, 2, 3, 2, False))
    assert abs(v1.value - mpmath.mpf("0.405085116107")) < 1e-11
    v3 = closed_value(SumSpec("linear", 1, 2, 3, 2, True))
    assert abs(v3.value - mpmath.mpf("0.292769232583")) < 1e-11


specs = st.builds(
    lambda kind, p, s, p2, s2, extra, k, alt: SumSpec(
        kind,
        p,
        s,
        (s if kind == "linear" else s + s2 - 1) + extra,
        k,
        alt,
        p2 if kind == "quadratic" else None,
        s2 if kind == "quadratic" else None,
    ),
    st.sampled_from(["linear", "quadratic"]),
    st.integers(1, 3),
    st.integers(1, 3),
    st.integers(1, 3),
    st.integers(1, 3),
    st.integers(0, 2),
    st.integers(1, 4),
    st.booleans(),
).filter(lambda s: s.m <= 6)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(specs)
def test_random_grid_points_match_oracle(spec):
    assert closed_value(spec).agrees(_oracle(spec), 1e-6)


@settings(max_examples=20, deadline=None)
@given(specs.filter(lambda s: s.kind == "quadratic"))
def test_quadratic_symmetry(spec):
    a, b = closed_value(spec), closed_value(spec.swapped())
    assert abs(a.value - b.value) <= a.err + b.err
