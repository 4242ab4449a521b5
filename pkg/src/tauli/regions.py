"""Geometry of the set ``|rho/(rho - tau)| >= R`` inside the strip.

The set is the closed disk (Apollonius circle) with centre ``tau R^2/(R^2-1)``
on the real axis and radius ``tau R/(R^2-1)``; only the part with
``Re rho < tau`` matters.  Also the classical comparison curves for
Dirichlet L-functions.
"""

import csv
import enum
import io
import math
from dataclasses import dataclass

from ._numeric import FLOAT
from .errors import DomainError
from .mobius import mobius_map

__all__ = [
    "RegionCircle",
    "Membership",
    "region",
    "classify",
    "boundary_curve",
    "mccurley_sigma",
    "kadiri_sigma",
    "comparison_curves",
    "write_curve_csv",
    "read_curve_csv",
    "BOUNDARY_RTOL",
]

BOUNDARY_RTOL = 1e-10
MCCURLEY_CONST = 9.645908801
KADIRI_CONST = 5.60
KADIRI_Q_MAX = 400000


class Membership(enum.Enum):
    INSIDE = "inside_region"
    OUTSIDE = "outside_region"
    ON_BOUNDARY = "on_boundary"


def _band(value, target, rtol):
    if abs(value - target) <= rtol * abs(target):
        return Membership.ON_BOUNDARY
    return Membership.INSIDE if value > target else Membership.OUTSIDE


@dataclass(frozen=True)
class RegionCircle:
    tau: float
    R: float
    center: float
    radius: float
    strip_height_bound: float
    strip_re_min: float
    excess: float  # R - 1, read from the decimal form of R

    def contains(self, rho):
        """Disk membership ``|rho - center| <= radius`` with the boundary band."""
        rho = complex(rho)
        d = math.hypot(rho.real - self.center, rho.imag)
        return _band(self.radius, d, BOUNDARY_RTOL)

    def classify(self, rho):
        return classify(rho, self.tau, self.R)

    def _check(self):
        tol = 1e-12 * self.center
        if not self.center > self.tau:
            raise AssertionError("centre must lie right of tau")
        if abs(self.center - self.radius - self.strip_re_min) > tol:
            raise AssertionError("left extreme mismatch")
        if not self.strip_height_bound < self.radius:
            raise AssertionError("strip must clip the disk top")


def region(tau, R):
    """Apollonius circle for ``|rho/(rho - tau)| = R``."""
    ex = FLOAT.excess(R)
    if not ex > 0:
        raise DomainError(f"R must exceed 1, got {R}")
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    Rf = 1.0 + ex
    r2m1 = ex * (2.0 + ex)
    circle = RegionCircle(
        tau=tau,
        R=Rf,
        center=tau * Rf * Rf / r2m1,
        radius=tau * Rf / r2m1,
        strip_height_bound=tau / math.sqrt(r2m1),
        strip_re_min=Rf * tau / (1.0 + Rf),
        excess=ex,
    )
    circle._check()
    return circle


def classify(rho, tau, R):
    """Compare ``|rho/(rho - tau)|`` with ``R`` (relative band 1e-10)."""
    R = 1.0 + FLOAT.excess(R)
    return _band(mobius_map(rho, tau).modulus, R, BOUNDARY_RTOL)


def boundary_curve(tau, R, samples=200):
    """Arc of the circle with ``Re <= tau``, from ``(tau, +h)`` through
    ``(strip_re_min, 0)`` to ``(tau, -h)``.

    ``samples`` points per half, uniform in the angle measured from the
    centre; ``2*samples - 1`` points in total.  The real part is written as
    ``tau R ((R-1) + 2 sin^2(phi/2)) / (R^2-1)`` to avoid cancellation when
    ``R`` is close to 1.
    """
    if samples < 2:
        raise DomainError("samples must be at least 2")
    c = region(tau, R)
    ex, Rf = c.excess, c.R
    r2m1 = ex * (2.0 + ex)
    phi_max = math.atan(math.sqrt(r2m1))
    top = []
    for k in range(samples):
        phi = phi_max * (1.0 - k / (samples - 1))
        s = math.sin(0.5 * phi)
        re = tau * Rf * (ex + 2.0 * s * s) / r2m1
        im = c.radius * math.sin(phi)
        top.append((re, im))
    top[0] = (float(tau), c.strip_height_bound)
    top[-1] = (c.strip_re_min, 0.0)
    bottom = [(re, -im) for re, im in reversed(top[:-1])]
    return top + bottom


def mccurley_sigma(q, t):
    """``1 - 1/(9.645908801 log max{q, q|t|, 10})``."""
    if q < 3:
        raise DomainError(f"q must be at least 3, got {q}")
    return 1.0 - 1.0 / (MCCURLEY_CONST * math.log(max(q, q * abs(t), 10)))


def kadiri_sigma(q, t):
    """``1 - 1/(5.60 log(q max{1, |t|}))``, valid for ``3 <= q <= 400000``."""
    if not 3 <= q <= KADIRI_Q_MAX:
        raise DomainError(f"q must lie in [3, {KADIRI_Q_MAX}], got {q}")
    return 1.0 - 1.0 / (KADIRI_CONST * math.log(q * max(1.0, abs(t))))


def comparison_curves(q, tau, R_values, t_max=80.0, samples=200):
    """Rows ``(re, im, label)``: the region boundary for each ``R`` and, when
    ``q`` is given, both classical curves over ``-t_max <= t <= t_max``."""
    rows = []
    for R in R_values:
        label = f"tauli R={R}"
        rows += [(re, im, label) for re, im in boundary_curve(tau, R, samples)]
    if q is None:
        return rows
    ts = [t_max * (2 * k / (samples - 1) - 1) for k in range(samples)]
    rows += [(mccurley_sigma(q, t), t, "mccurley") for t in ts]
    if 3 <= q <= KADIRI_Q_MAX:
        rows += [(kadiri_sigma(q, t), t, "kadiri") for t in ts]
    return rows


def write_curve_csv(rows, stream=None):
    """Write ``re,im,label`` with 17 significant digits; returns the text
    when ``stream`` is None."""
    out = io.StringIO() if stream is None else stream
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["re", "im", "label"])
    for re, im, label in rows:
        w.writerow([format(re, ".17g"), format(im, ".17g"), label])
    if stream is None:
        return out.getvalue()
    return None


def read_curve_csv(stream):
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    r = csv.reader(stream)
    header = next(r)
    if header != ["re", "im", "label"]:
        raise ValueError(f"unexpected header {header}")
    return [(float(a), float(b), c) for a, b, c in r]
