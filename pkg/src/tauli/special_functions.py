"""Real branches of the Lambert W function.

``lambert_w0`` and ``lambert_wm1`` invert ``w * exp(w)`` on the principal
branch (``w >= -1``) and the lower branch (``w <= -1``).  Both start from a
branch-point series or an asymptotic guess and are polished with Halley
iterations.
"""

import enum
import math

__all__ = ["WBranch", "lambert_w0", "lambert_wm1", "lambert_w", "BRANCH_POINT"]

# -1/e split into a double plus its rounding residual, so that x + 1/e is
# accurate near the branch point.
_INV_E_HI = 0.36787944117144233
_INV_E_LO = -1.2428753672788363e-17
BRANCH_POINT = -_INV_E_HI

_MAX_ITER = 64


class WBranch(enum.Enum):
    PRINCIPAL = 0
    MINUS_ONE = -1


def _offset_from_branch_point(x):
    """Return x + 1/e with the residual of 1/e folded in."""
    return (x + _INV_E_HI) + _INV_E_LO


def _near_branch_point(x):
    # Within one ulp of the double nearest -1/e.
    return abs(x - BRANCH_POINT) <= math.ulp(_INV_E_HI)


def _halley(w, x):
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0:
            break
        step = f / denom
        w_new = w - step
        if not math.isfinite(w_new):
            break
        if abs(step) <= 4.0 * math.ulp(w_new) or w_new == w:
            return w_new
        w = w_new
    return w


def lambert_w0(x):
    """Principal branch ``W_0`` on ``[-1/e, inf)``.

    Raises ``ValueError`` below the branch point.  Inputs within one ulp of
    ``-1/e`` are treated as the branch point itself and return ``-1``.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("lambert_w0: NaN input")
    if _near_branch_point(x):
        return -1.0
    if x < BRANCH_POINT:
        raise ValueError(f"lambert_w0: x={x!r} is below the branch point -1/e")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    d = _offset_from_branch_point(x)
    if d < 0.25:
        p = math.sqrt(2.0 * math.e * d)
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3
    elif x < 3.0:
        w = math.log1p(x) if x > 0.0 else x * (1.0 - x)
    else:
        lx = math.log(x)
        llx = math.log(lx)
        w = lx - llx + llx / lx
    w = _halley(w, x)
    return max(w, -1.0)


def lambert_wm1(x):
    """Lower branch ``W_{-1}`` on ``[-1/e, 0)``.

    Raises ``ValueError`` for ``x >= 0`` or below the branch point.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("lambert_wm1: NaN input")
    if _near_branch_point(x):
        return -1.0
    if x < BRANCH_POINT or x >= 0.0:
        raise ValueError(f"lambert_wm1: x={x!r} outside [-1/e, 0)")

    d = _offset_from_branch_point(x)
    if d < 0.25 * _INV_E_HI:
        p = math.sqrt(2.0 * math.e * d)
        w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p ** 3
    else:
        l1 = math.log(-x)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    w = _halley(w, x)
    return min(w, -1.0)


def lambert_w(x, branch=WBranch.PRINCIPAL):
    if WBranch(branch) is WBranch.PRINCIPAL:
        return lambert_w0(x)
    return lambert_wm1(x)
