"""Arithmetic backends shared by the constant and threshold formulas.

Every formula that feeds a ceiling or floor is written once against a small
backend interface (``log``, ``exp``, ``w0``...).  ``FLOAT`` evaluates in
doubles; ``MPBackend`` re-evaluates the same expression in extended precision
when a double result sits too close to an integer to round safely.

User-facing real parameters (``R`` in particular) are read with *decimal
intent*: a float ``1.0000000001`` means the decimal ``1.0000000001``, not the
nearest binary double.  This matters because thresholds scale like
``1/log R`` and ``R - 1`` can be as small as ``1e-10``.
"""

import math
from decimal import Decimal

import mpmath

from .special_functions import lambert_w0, lambert_wm1

# Relative distance to an integer below which a double result is re-evaluated.
HARDEN_RTOL = 1e-9
EXTENDED_DPS = 50
# An extended-precision value this close (relative) to an integer is taken
# to be that integer: the residue is representation error of decimal inputs.
SNAP_RTOL = 1e-40


def to_decimal(x):
    """Decimal reading of a user-supplied real (floats via their shortest repr)."""
    if isinstance(x, Decimal):
        return x
    if isinstance(x, float):
        return Decimal(repr(x))
    return Decimal(str(x))


class FloatBackend:
    name = "float"
    e = math.e
    pi = math.pi

    def num(self, x):
        return float(x)

    log = staticmethod(math.log)
    log1p = staticmethod(math.log1p)
    exp = staticmethod(math.exp)
    expm1 = staticmethod(math.expm1)
    sqrt = staticmethod(math.sqrt)

    @staticmethod
    def w0(x):
        return lambert_w0(x)

    @staticmethod
    def wm1(x):
        return lambert_wm1(x)

    def excess(self, R):
        """``R - 1`` taken from the decimal reading of ``R``."""
        return float(to_decimal(R) - 1)


class MPBackend:
    """mpmath evaluation in a private context (no global precision state)."""

    name = "mpmath"

    def __init__(self, dps=EXTENDED_DPS):
        self.ctx = mpmath.MPContext()
        self.ctx.dps = dps
        self.e = self.ctx.e
        self.pi = self.ctx.pi

    def num(self, x):
        if isinstance(x, (float, Decimal, str)):
            return self.ctx.mpf(str(to_decimal(x)))
        return self.ctx.mpf(x)

    def log(self, x):
        return self.ctx.log(x)

    def log1p(self, x):
        return self.ctx.log1p(x)

    def exp(self, x):
        return self.ctx.exp(x)

    def expm1(self, x):
        return self.ctx.expm1(x)

    def sqrt(self, x):
        return self.ctx.sqrt(x)

    def w0(self, x):
        if x < -1 / self.e:
            raise ValueError("W0 argument below -1/e")
        return self.ctx.re(self.ctx.lambertw(x, 0))

    def wm1(self, x):
        if x < -1 / self.e or x >= 0:
            raise ValueError("W-1 argument outside [-1/e, 0)")
        return self.ctx.re(self.ctx.lambertw(x, -1))

    def excess(self, R):
        return self.ctx.mpf(str(to_decimal(R) - 1))


FLOAT = FloatBackend()


def near_integer(x, rtol=HARDEN_RTOL):
    x = float(x)
    return abs(x - round(x)) <= rtol * max(1.0, abs(x))


def hardened(expr, mode):
    """Round ``expr(backend)`` up (``mode="ceil"``) or down (``"floor"``).

    The double result is used unless it lies within ``HARDEN_RTOL`` of an
    integer, in which case the expression is recomputed with mpmath and
    values within ``SNAP_RTOL`` of an integer are taken as exact.
    Returns ``(integer, value_used)``.
    """
    value = expr(FLOAT)
    if math.isfinite(value) and near_integer(value):
        mp = MPBackend()
        precise = expr(mp)
        nearest = mp.ctx.nint(precise)
        if abs(precise - nearest) <= SNAP_RTOL * max(1, abs(nearest)):
            return int(nearest), precise
        return int(getattr(mp.ctx, mode)(precise)), precise
    return int(getattr(math, mode)(value)), value


def hardened_ceil(expr):
    return hardened(expr, "ceil")[0]


def hardened_floor(expr):
    return hardened(expr, "floor")[0]
