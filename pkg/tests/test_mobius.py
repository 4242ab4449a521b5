import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tauli.errors import SingularityError, TermOverflow
from tauli.mobius import (
    POLAR_THRESHOLD,
    lambda1_closed_form,
    li_partial,
    li_term,
    mobius_map,
    re_li_partial,
    tail_sum,
)
from tauli.zero_model import ZeroSet

taus = st.floats(min_value=0.4, max_value=5.0)


def test_fixed_images():
    img = mobius_map(0.5, 1.0)
    assert (img.x, img.y, img.modulus) == (-1.0, 0.0, 1.0)
    img = mobius_map(0.75, 1.0)
    assert (img.x, img.y, img.modulus) == (-3.0, 0.0, 3.0)


def test_singularity():
    with pytest.raises(SingularityError):
        mobius_map(1.0, 1.0)
    with pytest.raises(SingularityError):
        li_term(complex(2.0, 0.0), 3, 2.0)


@pytest.mark.parametrize("n,expected", [(1, 2.0), (2, 0.0), (3, 2.0), (10, 0.0)])
def test_real_critical_point(n, expected):
    assert li_term(0.5, n, 1.0) == pytest.approx(complex(expected, 0.0))


def test_modulus_three_square():
    assert li_term(0.75, 2, 1.0) == pytest.approx(complex(-8.0, 0.0))


# mpmath at 50 digits, rho = 0.5 + 14.134725 i, tau = 1.
LI_REFERENCE = {
    1: complex(0.0024994944669258387, 0.070659333858036650),
    2: complex(0.0099854829225229688, 0.14096544248804364),
    3: complex(0.022420542993342919, 0.21056686643099740),
}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_single_zero_reference(n):
    zs = ZeroSet((complex(0.5, 14.134725),), 1.0)
    got = li_partial(zs, n)
    assert got.real == pytest.approx(LI_REFERENCE[n].real, rel=1e-12)
    assert got.imag == pytest.approx(LI_REFERENCE[n].imag, rel=1e-12)


def test_empty_set_and_empty_window():
    zs = ZeroSet((), 1.0)
    assert li_partial(zs, 5) == 0
    zs = ZeroSet((0.5 + 3j, 0.5 - 3j), 1.0)
    assert tail_sum(zs, 2, 10.0, 20.0) == 0


def test_tail_window_is_half_open():
    zs = ZeroSet((0.5 + 3j, 0.5 + 5j), 1.0)
    assert tail_sum(zs, 2, 3.0, 5.0) == pytest.approx(li_term(0.5 + 5j, 2, 1.0).real)


def test_overflow_flagged():
    rho = complex(0.999, 0.0)  # modulus 999
    with pytest.raises(TermOverflow) as exc:
        li_term(rho, 200, 1.0)
    assert exc.value.sign == -1
    assert exc.value.log_modulus == pytest.approx(200 * math.log(999.0), rel=1e-12)
    assert li_term(rho, 200, 1.0, on_overflow="inf").real == -math.inf


def test_partial_sum_names_offending_zero():
    zs = ZeroSet((0.5 + 1j, complex(0.999, 0.0)), 1.0)
    with pytest.raises(TermOverflow) as exc:
        li_partial(zs, 500)
    assert exc.value.zero == complex(0.999, 0.0)


def test_polar_and_binary_powers_agree():
    rho = complex(0.52, 7.3)
    for n in (POLAR_THRESHOLD, POLAR_THRESHOLD + 1, 5 * POLAR_THRESHOLD):
        w = rho / (rho - 1.0)
        assert li_term(rho, n, 1.0) == pytest.approx(1 - w ** n, rel=1e-9, abs=1e-9)


def test_lambda1_closed_form_points():
    assert lambda1_closed_form(0.5, 1.0) == pytest.approx(2.0)
    assert lambda1_closed_form(complex(0.0, 3.0), 1.0) == pytest.approx(1.0 / 10.0)
    assert lambda1_closed_form(complex(1 - 1e-9, 0.0), 1.0) >= 0


@given(taus, st.floats(min_value=0.0, max_value=0.999), st.floats(min_value=-1e4, max_value=1e4))
def test_image_matches_complex_division(tau, frac, t):
    rho = complex(frac * tau, t)
    assume(abs(rho - tau) > 1e-6)
    img = mobius_map(rho, tau)
    w = rho / (rho - tau)
    assert abs(img.value - w) <= 1e-12 * max(1.0, abs(w))
    assert img.modulus == pytest.approx(abs(w), rel=1e-12)


@given(taus, st.floats(min_value=-1e4, max_value=1e4))
def test_critical_line_maps_to_unit_circle(tau, t):
    assert mobius_map(complex(tau / 2, t), tau).modulus == pytest.approx(1.0, rel=1e-12)


@given(taus, st.floats(min_value=0.0, max_value=0.999), st.floats(min_value=-1e3, max_value=1e3))
def test_modulus_above_one_iff_right_of_centre(tau, frac, t):
    rho = complex(frac * tau, t)
    assume(abs(frac - 0.5) > 1e-6)
    assert (mobius_map(rho, tau).modulus > 1) == (frac > 0.5)


@given(taus, st.floats(min_value=0.0, max_value=0.999), st.floats(min_value=-1e3, max_value=1e3))
def test_first_term_closed_form(tau, frac, t):
    rho = complex(frac * tau, t)
    assume(abs(rho - tau) > 1e-3)
    closed = lambda1_closed_form(rho, tau)
    assert closed >= 0
    assert li_term(rho, 1, tau).real == pytest.approx(closed, rel=1e-12, abs=1e-12)


@given(
    st.lists(st.tuples(st.floats(0.0, 0.95), st.floats(0.1, 500.0)), min_size=1, max_size=20),
    st.integers(1, 50),
)
def test_conjugate_symmetric_sets_are_real(pairs, n):
    zs = []
    for frac, t in pairs:
        zs += [complex(frac, t), complex(frac, -t)]
    try:
        v = li_partial(ZeroSet(tuple(zs), 1.0), n)
    except TermOverflow:
        return
    assert abs(v.imag) <= 1e-10 * len(zs) * max(1.0, abs(v.real))


@given(st.lists(st.floats(0.1, 100.0), min_size=1, max_size=10), st.integers(1, 30))
def test_sum_independent_of_listing_order(ts, n):
    zs = tuple(complex(0.5, t) for t in ts)
    a = li_partial(ZeroSet(zs, 1.0), n)
    b = li_partial(ZeroSet(tuple(reversed(zs)), 1.0), n)
    assert a == b


def test_re_partial_matches_real_part():
    zs = ZeroSet((0.5 + 14.134725j, 0.5 - 14.134725j, 0.3 + 2j), 1.0)
    assert re_li_partial(zs, 4) == li_partial(zs, 4).real


def test_term_is_one_minus_power():
    rho = complex(0.3, 2.0)
    w = rho / (rho - 1.0)
    assert cmath.isclose(li_term(rho, 7, 1.0), 1 - w ** 7, rel_tol=1e-13)
