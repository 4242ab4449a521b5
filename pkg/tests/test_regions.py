import io
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tauli.errors import DomainError
from tauli.mobius import mobius_map
from tauli.regions import (
    BOUNDARY_RTOL,
    Membership,
    boundary_curve,
    classify,
    comparison_curves,
    kadiri_sigma,
    mccurley_sigma,
    read_curve_csv,
    region,
    write_curve_csv,
)

taus = st.floats(min_value=0.4, max_value=5.0)
Rs = st.floats(min_value=1.0001, max_value=10.0)


def test_region_values():
    c = region(1.0, "1.01")
    assert c.strip_re_min == pytest.approx(0.50248756218905473, rel=1e-15)
    assert c.center == pytest.approx(1.0201 / 0.0201, rel=1e-14)
    assert c.radius == pytest.approx(1.01 / 0.0201, rel=1e-14)
    assert region(1.0, "1.1").strip_height_bound == pytest.approx(2.1821789023599238, rel=1e-14)


def test_region_domain():
    for R in ("1", "0.9"):
        with pytest.raises(DomainError):
            region(1.0, R)
    with pytest.raises(DomainError):
        region(0.0, "1.1")


def test_classify_examples():
    assert classify(0.5 + 1j, 1.0, "1.1") is Membership.OUTSIDE
    assert classify(0.99, 1.0, "1.1") is Membership.INSIDE
    # Apex of the disk: modulus exactly R.
    assert classify(1.1 / 2.1, 1.0, "1.1") is Membership.ON_BOUNDARY


def test_boundary_endpoints_and_apex():
    pts = boundary_curve(1.0, "1.1", samples=50)
    assert len(pts) == 99
    h = 1.0 / math.sqrt(1.1 ** 2 - 1)
    assert pts[0] == pytest.approx((1.0, h), abs=1e-10)
    assert pts[-1] == pytest.approx((1.0, -h), abs=1e-10)
    assert pts[49] == pytest.approx((1.1 / 2.1, 0.0), abs=1e-10)


def test_boundary_smallest_sampling():
    assert len(boundary_curve(1.0, "1.5", samples=2)) == 3
    with pytest.raises(DomainError):
        boundary_curve(1.0, "1.5", samples=1)


@given(taus, Rs, st.integers(2, 60))
def test_boundary_points_have_modulus_R(tau, R, samples):
    for re, im in boundary_curve(tau, R, samples):
        if re >= tau * (1 - 1e-12) and abs(im) < 1e-300:
            continue
        assert mobius_map(complex(re, im), tau).modulus == pytest.approx(R, rel=1e-9)
        assert re <= tau * (1 + 1e-12)


@given(taus, Rs, st.floats(0.0, 0.999), st.floats(-50.0, 50.0))
def test_modulus_and_disk_agree(tau, R, frac, t):
    c = region(tau, R)
    rho = complex(frac * tau, t)
    a = classify(rho, tau, R)
    b = c.contains(rho)
    if Membership.ON_BOUNDARY not in (a, b):
        assert a is b


@given(taus, st.floats(1.001, 5.0), st.floats(1.001, 5.0))
def test_regions_nest_as_R_grows(tau, r1, r2):
    r1, r2 = min(r1, r2), max(r1, r2)
    assume(r2 - r1 > 1e-6)
    small, big = region(tau, r2), region(tau, r1)
    assert small.strip_re_min > big.strip_re_min
    assert small.strip_height_bound < big.strip_height_bound


@given(taus, Rs)
def test_left_extreme_lies_right_of_centre_line(tau, R):
    c = region(tau, R)
    assert tau / 2 < c.strip_re_min < tau


def test_mccurley_values():
    assert mccurley_sigma(100, 0) == pytest.approx(0.97748815114972743, rel=1e-15)
    assert mccurley_sigma(100, 2) == pytest.approx(0.98043324172853593, rel=1e-15)
    assert mccurley_sigma(3, 0) == pytest.approx(1 - 1 / (9.645908801 * math.log(10)))


def test_kadiri_values():
    assert kadiri_sigma(100, 0) == pytest.approx(0.96122370697292394, rel=1e-15)
    assert kadiri_sigma(100, 10) == pytest.approx(0.97414913798194930, rel=1e-15)
    with pytest.raises(DomainError):
        kadiri_sigma(400001, 0)
    with pytest.raises(DomainError):
        mccurley_sigma(2, 0)


def test_comparison_curves_labels():
    rows = comparison_curves(100, 1.0, ["1.1", "1.01"], samples=20)
    labels = {r[2] for r in rows}
    assert labels == {"tauli R=1.1", "tauli R=1.01", "mccurley", "kadiri"}
    assert sum(r[2] == "mccurley" for r in rows) == 20
    assert {r[2] for r in comparison_curves(10 ** 6, 1.0, ["1.1"], samples=5)} == {"tauli R=1.1", "mccurley"}
    assert {r[2] for r in comparison_curves(None, 1.0, ["1.1"], samples=5)} == {"tauli R=1.1"}


def test_csv_round_trip_is_exact():
    rows = comparison_curves(100, 1.0, ["1.1"], samples=30)
    text = write_curve_csv(rows)
    assert text.startswith("re,im,label\n")
    back = read_curve_csv(text)
    assert back == rows
    assert write_curve_csv(back) == text
    buf = io.StringIO()
    write_curve_csv(rows, buf)
    assert buf.getvalue() == text


def test_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        read_curve_csv("x,y,z\n")


def test_boundary_band_is_relative():
    assert BOUNDARY_RTOL == 1e-10
    apex = 1.1 / 2.1
    assert classify(apex * (1 + 1e-13), 1.0, "1.1") is Membership.ON_BOUNDARY
    assert classify(apex * (1 + 1e-6), 1.0, "1.1") is Membership.INSIDE
