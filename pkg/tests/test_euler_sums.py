import mpmath
import pytest

from hhsum.approx import to_mpf
from hhsum.constants import zeta, zeta_alt
from hhsum.errors import DivergenceError
from hhsum.euler_sums import (
    EulerSumSpec,
    euler_reduction_check,
    linear_euler,
    quadratic_euler,
)
from hhsum.sequences import harmonic, harmonic_alt


def test_euler_identity_m2():
    assert linear_euler(1, 2).agrees(2 * zeta(3), 1e-30)
    assert abs(linear_euler(1, 2).value - mpmath.mpf("2.4041138")) < 1e-7


@pytest.mark.parametrize("m", range(2, 7))
def test_reduction_check(m):
    lhs, rhs = euler_reduction_check(m)
    assert lhs.agrees(rhs, 1e-8)


def test_reduction_values():
    lhs, rhs = euler_reduction_check(2)
    assert abs(lhs.value - mpmath.mpf("4.8082276")) < 1e-7
    lhs, rhs = euler_reduction_check(3)
    assert abs(lhs.value - mpmath.pi**4 / 36) < 1e-25


def test_divergent():
    with pytest.raises(DivergenceError):
        linear_euler(1, 1)
    with pytest.raises(DivergenceError):
        quadratic_euler(1, 1, 1)
    assert not EulerSumSpec("linear", 1, 1).convergent


def test_alternating_known_values():
    assert linear_euler(1, 2, "+", "-").agrees(zeta(3) * 5 / 8, 1e-30)
    assert abs(linear_euler(1, 2, "+", "-").value - mpmath.mpf("0.7512856")) < 1e-7
    l2 = mpmath.log(2)
    assert abs(linear_euler(1, 1, "+", "-").value - (mpmath.zeta(2) / 2 - l2**2 / 2)) < 1e-30


def test_quadratic_known_value():
    q = quadratic_euler(1, 1, 2)
    assert abs(q.value - 17 * mpmath.pi**4 / 360) <= q.err + 1e-30
    assert abs(q.value - mpmath.mpf("4.5998744")) < 1e-6


def test_quadratic_symmetric():
    assert quadratic_euler(1, 2, 3).value == quadratic_euler(2, 1, 3).value


def _partials(term, N):
    s = mpmath.mpf(0)
    out = []
    for n in range(1, N + 1):
        s += term(n)
        out.append(s)
    return out


@pytest.mark.parametrize(
    "value,term",
    [
        (lambda: quadratic_euler(1, 1, 1, "-"), lambda n: (-1) ** (n - 1) * to_mpf(harmonic(n, 1)) ** 2 / n),
        (lambda: linear_euler(2, 1, "+", "-"), lambda n: (-1) ** (n - 1) * to_mpf(harmonic(n, 2)) / n),
        (lambda: linear_euler(1, 2, "-", "-"), lambda n: (-1) ** (n - 1) * to_mpf(harmonic_alt(n, 1)) / n**2),
    ],
)
def test_alternating_bracketed_by_partials(value, term):
    v = value().value
    ps = _partials(term, 200)
    for a, b in zip(ps[100:], ps[101:]):
        assert min(a, b) <= v <= max(a, b)


@pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_minus_plus_against_direct(p, q):
    # sum Hbar_n^(p)/n^q: compare with a long partial sum plus the crude tail zeta_alt(p)/((q-1)N^(q-1))
    v = linear_euler(p, q, "-", "+")
    N = 4000
    s = hbar = mpmath.mpf(0)
    for n in range(1, N + 1):
        hbar += (-1) ** (n - 1) / mpmath.mpf(n) ** p
        s += hbar / mpmath.mpf(n) ** q
    tail = zeta_alt(p).value / ((q - 1) * mpmath.mpf(N) ** (q - 1))
    assert abs(v.value - (s + tail)) < 1e-6
