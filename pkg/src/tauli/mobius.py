"""The map rho -> rho/(rho - tau) and truncated tau-Li sums over zero sets.

The truncated coefficient is

    lambda(n, tau) ~ sum over listed zeros of 1 - (rho / (rho - tau))**n

with zeros ordered by ``|Im rho|``.  Powers use binary exponentiation for
moderate ``n`` and polar form (``exp(n log|w|)``, ``n arg w``) beyond
``POLAR_THRESHOLD``.
"""

import math
from dataclasses import dataclass

from .errors import SingularityError, TermOverflow

__all__ = [
    "MobiusImage",
    "mobius_map",
    "li_term",
    "li_partial",
    "re_li_partial",
    "tail_sum",
    "lambda1_closed_form",
]

POLAR_THRESHOLD = 1000
OVERFLOW_LOG = math.log(1e300)
_SINGULAR_EPS = 1e-300


@dataclass(frozen=True)
class MobiusImage:
    x: float
    y: float
    modulus: float

    @property
    def value(self):
        return complex(self.x, self.y)


def mobius_map(rho, tau):
    """Real part, imaginary part and modulus of ``rho/(rho - tau)``.

    Uses ``x = 1 + (Re(rho) tau - tau^2)/|rho - tau|^2`` and
    ``y = -Im(rho) tau/|rho - tau|^2``.
    """
    rho = complex(rho)
    d = rho - tau
    d2 = d.real * d.real + d.imag * d.imag
    if abs(d) < _SINGULAR_EPS or d2 == 0.0:
        raise SingularityError(f"rho={rho!r} coincides with tau={tau!r}")
    x = 1.0 + (rho.real * tau - tau * tau) / d2
    y = -rho.imag * tau / d2
    return MobiusImage(x, y, math.hypot(x, y))


def _power_rect(w, n):
    result = complex(1.0, 0.0)
    base = w
    while n:
        if n & 1:
            result *= base
        n >>= 1
        if n:
            base *= base
    return result


def li_term(rho, n, tau, on_overflow="raise"):
    """``1 - (rho/(rho - tau))**n``.

    When ``|w|**n`` exceeds 1e300 a :class:`TermOverflow` is raised carrying
    the sign of the real part; with ``on_overflow="inf"`` a complex number with
    a signed-infinite real part is returned instead.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    img = mobius_map(rho, tau)
    w = img.value
    log_mod = math.log(img.modulus) if img.modulus > 0 else -math.inf
    if n * log_mod > OVERFLOW_LOG:
        phase = n * math.atan2(img.y, img.x)
        c = math.cos(phase)
        sign = -1 if c > 0 else (1 if c < 0 else 0)
        if on_overflow == "inf":
            return complex(sign * math.inf, 0.0)
        raise TermOverflow(
            f"|rho/(rho-tau)|**n overflows for rho={complex(rho)!r}, n={n}", sign, n * log_mod
        )
    if n > POLAR_THRESHOLD:
        if img.modulus == 0.0:
            return complex(1.0, 0.0)
        mag = math.exp(n * log_mod)
        phase = n * math.atan2(img.y, img.x)
        return complex(1.0 - mag * math.cos(phase), -mag * math.sin(phase))
    return 1.0 - _power_rect(w, n)


def _ordered(zeros):
    # Fixed reduction order keeps results reproducible.
    return sorted(zeros, key=lambda z: (abs(z.imag), z.imag, z.real))


def _sum_terms(zeros, n, tau):
    re_parts, im_parts = [], []
    for z in _ordered(zeros):
        try:
            t = li_term(z, n, tau)
        except (SingularityError, TermOverflow) as exc:
            exc.args = (f"{exc.args[0]} [zero {z!r}]",) + exc.args[1:]
            exc.zero = z
            raise
        re_parts.append(t.real)
        im_parts.append(t.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def li_partial(zero_set, n):
    """Truncated tau-Li coefficient over every zero in ``zero_set``."""
    return _sum_terms(zero_set.zeros, n, zero_set.tau)


def re_li_partial(zero_set, n):
    return li_partial(zero_set, n).real


def tail_sum(zero_set, n, T_lo, T_hi):
    """Real part of the sum restricted to ``T_lo < |Im rho| <= T_hi``."""
    if not T_lo < T_hi:
        raise ValueError("tail_sum needs T_lo < T_hi")
    window = [z for z in zero_set.zeros if T_lo < abs(z.imag) <= T_hi]
    return _sum_terms(window, n, zero_set.tau).real


def lambda1_closed_form(rho, tau):
    """``Re(1 - rho/(rho - tau)) = tau (tau - Re rho) / |rho - tau|^2``."""
    rho = complex(rho)
    d = rho - tau
    return tau * (tau - rho.real) / (d.real * d.real + d.imag * d.imag)
