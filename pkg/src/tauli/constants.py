"""Explicit constants M_F, K1, K2, K3(T), K4 derived from a zero-count model.

All general formulas accept a ``backend`` so the threshold code can re-run
them in extended precision.  The ``dirichlet_*`` / ``newform_*`` functions
are the closed forms specialised to the two catalogued families; they are
written out independently and serve as a cross-check on the general ones.
"""

import math
from dataclasses import dataclass

from ._numeric import FLOAT
from .errors import DomainError

__all__ = [
    "ConstantBundle",
    "constant_bundle",
    "m_f",
    "k1",
    "k2",
    "log_k2",
    "k3",
    "k4",
    "k3_positivity_threshold",
    "dirichlet_m_f",
    "dirichlet_k1",
    "dirichlet_k2",
    "dirichlet_k4",
    "newform_k1",
    "newform_k4",
]

# sqrt(3) truncated as in the published tables; must stay literal.
SQRT3_FLOOR = "1.732"


def _check_tau(tau):
    if not tau > 1 / math.e:
        raise DomainError(f"tau must exceed 1/e, got {tau}")


def m_f(model, backend=FLOAT):
    """``B_F + C1/e + C2/3 + C3/9``."""
    b = backend
    return model.B_F + model.C1 / b.e + model.C2 / 3 + model.C3 / 9


def k1(model, tau, backend=FLOAT):
    """Constant bounding the contribution of zeros above height ``n e tau``."""
    _check_tau(tau)
    b = backend
    e = b.e
    A, B = model.A_F, model.B_F
    first = 2 * tau / 3 * (e + 1 / e) * (A + abs(A * b.log(8 * e * tau) + B))
    second = (
        b.num(4) / 27 * (1 + 1 / e ** 2)
        * (
            model.c1 / 3 * b.log(b.num(2))
            + model.c1 * b.log(e ** 2 * tau)
            + model.c2
            + 2 * model.c3 / (7 * e * tau)
        )
    )
    return first + second


def _k2_inner(model, tau, b):
    # The bracket shared by K2 and the small-zero estimate.
    e = b.e
    l3 = b.log(3 * e * tau)
    return (
        model.A_F
        + abs(model.B_F) / l3
        + model.C1 / (3 * e * tau)
        + model.C2 / (3 * e * tau * l3)
        + model.C3 / (9 * (e * tau) ** 2 * l3)
    )


def log_k2(model, tau, backend=FLOAT):
    """``log K2`` without forming the exponential factor, which overflows a
    double for large ``M_F`` (the newform has ``M_F`` near 4100)."""
    _check_tau(tau)
    b = backend
    e = b.e
    A = model.A_F
    M = m_f(model, b)
    log_term = abs(b.log(A + abs(M) / b.num(SQRT3_FLOOR)))
    log_growth = b.log(2 * tau) + (5 * tau ** 2 * M + 2) / 2 + b.log(_k2_inner(model, tau, b))
    log_k1 = b.log(k1(model, tau, b))
    hi, lo = max(log_growth, log_k1), min(log_growth, log_k1)
    return (
        b.log(5 * (A + abs(M)))
        + b.log(b.num(5) / 2 + b.log(5 * e * tau) + log_term)
        + hi
        + b.log1p(b.exp(lo - hi))
    )


def k2(model, tau, backend=FLOAT):
    """Growth constant of the non-negativity criterion; ``inf`` when it
    exceeds the double range (use :func:`log_k2`)."""
    _check_tau(tau)
    b = backend
    e = b.e
    A = model.A_F
    M = m_f(model, b)
    log_term = abs(b.log(A + abs(M) / b.num(SQRT3_FLOOR)))
    try:
        growth = 2 * tau * b.exp((5 * tau ** 2 * M + 2) / 2) * _k2_inner(model, tau, b)
    except OverflowError:
        return math.inf
    return 5 * (A + abs(M)) * (b.num(5) / 2 + b.log(5 * e * tau) + log_term) * (growth + k1(model, tau, b))


def k3(model, T, tau, backend=FLOAT):
    """Lower-bound constant for the high-zero contribution, at height ``T``."""
    _check_tau(tau)
    if T < model.T0:
        raise DomainError(f"T={T} below T0={model.T0}")
    b = backend
    A, B = model.A_F, model.B_F
    bracket = (
        A / 2 * b.log(2 * T)
        + (A * b.log(b.num(4)) + B) / 2
        - model.c1 / (3 * T) * b.log(b.num(2) ** (b.num(1) / 3) * T)
        - model.c2 / (3 * T)
        - 2 * model.c3 / (7 * T ** 2)
    )
    return b.num("0.432") * tau ** 2 / T * bracket


def k4(model, tau, backend=FLOAT):
    _check_tau(tau)
    b = backend
    e = b.e
    A, B = model.A_F, model.B_F
    le = b.log(e ** 2 * tau)
    return 2 * (
        A * e * tau * le
        + abs(B) * e * tau
        + (model.C1 * le + model.C2) / 3
        + model.C3 / (9 * e * tau)
    )


def k3_positivity_threshold(model, tau, T_hi=1e6, tol=1e-12):
    """Smallest ``T >= T0`` with ``k3(model, T, tau) > 0``, by bisection.

    Assumes a single sign change on ``[T0, T_hi]``.
    """
    lo = float(model.T0)
    if k3(model, lo, tau) > 0:
        return lo
    hi = float(T_hi)
    if k3(model, hi, tau) <= 0:
        raise DomainError(f"K3 is not positive anywhere up to T={T_hi}")
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if k3(model, mid, tau) > 0:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class ConstantBundle:
    model: object
    tau: float
    M_F: float
    K1: float
    K2: float
    K4: float

    def K3(self, T):
        return k3(self.model, T, self.tau)

    def as_dict(self):
        return {
            "M_F": self.M_F,
            "K1": self.K1,
            "K2": self.K2,
            "log K2": log_k2(self.model, self.tau),
            "K4": self.K4,
        }


def constant_bundle(model, tau):
    _check_tau(tau)
    return ConstantBundle(model, tau, m_f(model), k1(model, tau), k2(model, tau), k4(model, tau))


# ----------------------------------------------------------------------------
# Family-specific closed forms, transcribed term by term.


def dirichlet_m_f(q, backend=FLOAT):
    b = backend
    n = b.num
    return (
        b.log(n(q) / (2 * b.pi * b.e)) / b.pi
        + n("0.317") / b.e
        + (n("0.317") * b.log(n(q)) + n("6.401")) / 3
    )


def dirichlet_k1(q, tau, backend=FLOAT):
    b = backend
    n = b.num
    e, pi = b.e, b.pi
    return (
        2 * tau / (3 * pi) * (e + 1 / e) * (1 + abs(b.log(4 * n(q) * tau / pi)))
        + n(4) / 27 * (1 + 1 / e ** 2)
        * (
            n("0.634") / 3 * b.log(n(2))
            + n("0.317") * b.log(2 * e ** 4 * n(q) ** 2 * tau ** 2)
            + n("12.802")
        )
    )


def dirichlet_k2(q, tau, backend=FLOAT):
    """Specialised K2; no absolute values, so only valid while
    ``M_F >= 0`` and ``1/pi + M_F/1.732 >= 1``."""
    b = backend
    n = b.num
    e, pi = b.e, b.pi
    M = dirichlet_m_f(q, b)
    l3 = b.log(3 * e * tau)
    bracket = (
        1 / pi
        + abs(b.log(n(q) / (2 * pi * e))) / (pi * l3)
        + n("0.317") / (3 * e * tau)
        + (n("0.317") * b.log(n(q)) + n("6.401")) / (3 * e * tau * l3)
    )
    return (
        5 * (1 / pi + M)
        * (n(5) / 2 + b.log(5 * e * tau) + b.log(1 / pi + M / n(SQRT3_FLOOR)))
        * (2 * tau * b.exp((5 * tau ** 2 * M + 2) / 2) * bracket + dirichlet_k1(q, tau, b))
    )


def dirichlet_k4(q, tau, backend=FLOAT):
    b = backend
    n = b.num
    e, pi = b.e, b.pi
    return 2 * (
        e * tau / pi * (b.log(e ** 2 * tau) + abs(b.log(n(q) / (2 * pi * e))))
        + (n("0.317") * b.log(e ** 2 * n(q) * tau) + n("6.401")) / 3
    )


def newform_k1(tau, backend=FLOAT, as_printed=False):
    """Specialised K1 for the level 1 weight 12 newform.

    The published closed form shows ``21012/(7 e tau)`` for the c3 term; the
    general formula gives ``2 * 21012/(7 e tau)``, and only the latter
    reproduces the tabulated thresholds.  ``as_printed=True`` selects the
    published variant for comparison.
    """
    b = backend
    n = b.num
    e, pi = b.e, b.pi
    c3_term = n(21012) if as_printed else 2 * n(21012)
    return (
        2 * tau / (3 * pi) * (e + 1 / e) * (1 + abs(b.log(2 * tau / pi ** 2)))
        + n(4) / 27 * (1 + 1 / e ** 2)
        * (288 * b.log(2 * e ** 6 * tau ** 3) + 3622 + c3_term / (7 * e * tau))
    )


def newform_k4(tau, backend=FLOAT):
    b = backend
    e, pi = b.e, b.pi
    return 2 * (
        e * tau / pi * b.log(4 * e ** 3 * pi ** 2 * tau)
        + (586 * b.log(e ** 2 * tau) + 3904) / 3
        + 2586 / (e * tau)
    )
