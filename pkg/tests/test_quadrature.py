import mpmath
import pytest

from hhsum.errors import DomainError
from hhsum.verification.quadrature import CATALOG, QuadratureWarning, integrate, quad_approx


def test_catalog_values():
    G = mpmath.catalan
    assert integrate("log_over_1py2").contains(-G, 1e-30)
    assert integrate("phi_over_sin").contains(2 * G, 1e-30)
    assert integrate("log2_over_x2m1").contains(-mpmath.mpf(7) / 4 * mpmath.zeta(3), 1e-30)


@pytest.mark.parametrize("iid", sorted(CATALOG))
def test_removable_points_are_finite(iid):
    entry = CATALOG[iid]
    b = entry.b()
    assert mpmath.isfinite(entry.fn(b))
    assert integrate(iid).err < 1e-20


def test_subinterval():
    v = integrate("pi_over_4py2", 0, 2)
    assert v.contains(mpmath.pi / 2 * mpmath.atan(1), 1e-30)


def test_unknown_integrand():
    with pytest.raises(DomainError):
        integrate("nope")


def test_warning_when_tolerance_unreachable():
    with pytest.warns(QuadratureWarning):
        integrate("phi_over_sin", tol=1e-80)


def test_quad_approx_empty_interval():
    assert quad_approx(lambda x: x, 1, 1).value == 0
