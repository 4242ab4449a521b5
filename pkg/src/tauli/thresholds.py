"""Index thresholds for the tau-Li zero-region criteria.

* :func:`theorem1_N` -- index ``N`` and grid ``{N, 2N, ...} <= 5 N^2 (A log N + M_F)``
  on which non-negative coefficients rule out zeros with ``|rho/(rho-tau)| >= R``.
* :func:`theorem2` -- an interval ``[n0, n1]`` on which a negative coefficient
  forces such a zero; closed form via Lambert W, or the sharper direct scan.
* :func:`theorem3_N` -- index ``N`` for the single-exceptional-zero detector,
  grid ``{N, ..., 5N}``.

Every ceiling/floor goes through :func:`tauli._numeric.hardened`, and
``log R`` is computed as ``log1p(R - 1)`` from the decimal reading of ``R``.
"""

import math
import warnings
from dataclasses import dataclass, field

from ._numeric import FLOAT, hardened, hardened_ceil, hardened_floor
from .constants import k1, k3, k4, log_k2, m_f
from .errors import DomainError, InadmissibleError
from .zero_model import count_estimate_integer, promote

__all__ = [
    "ThresholdReport",
    "Bound",
    "theorem1_N",
    "theorem1_grid",
    "theorem2_T_floor",
    "theorem2_R_cap",
    "theorem2_interval",
    "theorem2_unclipped",
    "theorem2",
    "interval_direct",
    "direct_scan_values",
    "theorem3_N",
    "detector_threshold",
    "log_r",
]


@dataclass
class ThresholdReport:
    theorem: str
    tau: float
    R: object
    N: int = None
    grid_max: int = None
    n0: int = None
    n1: int = None
    T: float = None
    admissible: bool = True
    binding: str = None
    diagnostics: list = field(default_factory=list)
    reason: str = None

    @property
    def grid(self):
        """Multiples of ``N`` up to ``grid_max`` (lazy ``range``)."""
        if self.N is None:
            raise ValueError(f"{self.theorem} report has no grid")
        return range(self.N, self.grid_max + 1, self.N)

    @property
    def interval(self):
        return (self.n0, self.n1)


@dataclass
class Bound:
    value: float
    binding: str
    diagnostics: list


def log_r(R, backend=FLOAT):
    b = backend
    ex = b.excess(R)
    if not ex > 0:
        raise DomainError(f"R must exceed 1, got {R}")
    return b.log1p(ex)


def _r2_minus_1(R, b):
    ex = b.excess(R)
    return ex * (2 + ex)


def _check_common(tau, R):
    if not tau > 1 / math.e:
        raise DomainError(f"tau must exceed 1/e, got {tau}")
    log_r(R)


def _binding(terms):
    name, _ = max(terms, key=lambda kv: kv[1])
    return name


def _floats(terms):
    return [(k, float(v)) for k, v in terms]


# ----------------------------------------------------------------------------
# non-negativity criterion


def _theorem1_terms(model, tau, R, b):
    m = promote(model, b)
    tau = b.num(tau)
    A = m.A_F
    M = m_f(m, b)
    L = log_r(R, b)
    terms = [
        ("tau/sqrt(R^2-1)", tau / b.sqrt(_r2_minus_1(R, b))),
        ("T0", m.T0),
        ("exp((1-15M)/(15A))", b.exp((1 - 15 * M) / (15 * A))),
    ]
    c = 5 * tau ** 2 * A + 4
    if L <= 3 * c / (4 * b.e):
        terms.append(("exp(-W-1(-4 log R/(3(5 tau^2 A+4))))", b.exp(-b.wm1(-4 * L / (3 * c)))))
    else:
        terms.append(("e", b.e))
    terms.append(("12 log(20 K2)/log R", 12 * (b.log(b.num(20)) + log_k2(m, tau, b)) / L))
    return terms


def theorem1_N(model, tau, R):
    """Threshold ``N`` and grid bound for the non-negativity criterion."""
    _check_common(tau, R)
    terms = _theorem1_terms(model, tau, R, FLOAT)
    N = hardened_ceil(lambda b: max(v for _, v in _theorem1_terms(model, tau, R, b)))

    def grid_expr(b):
        m = promote(model, b)
        n = b.num(N)
        return 5 * n * n * (m.A_F * b.log(n) + m_f(m, b))

    grid_max = hardened_floor(grid_expr)
    return ThresholdReport(
        theorem="main1",
        tau=tau,
        R=R,
        N=N,
        grid_max=grid_max,
        binding=_binding(terms),
        diagnostics=_floats(terms) + [("5N^2(A log N + M)", float(grid_expr(FLOAT)))],
    )


def theorem1_grid(report):
    if report.theorem != "main1":
        raise ValueError("theorem1_grid needs a main1 report")
    return report.grid


# ----------------------------------------------------------------------------
# negativity criterion


def _x_over_w0(x, b):
    # x / W0(x) -> 1 as x -> 0, but the terms exist only for positive constants.
    return x / b.w0(x) if x > 0 else b.num(0)


def theorem2_T_floor(model, backend=FLOAT):
    """Lower bound that ``T`` must exceed; eight competing terms."""
    b = backend
    m = promote(model, b)
    A, B = m.A_F, m.B_F
    e2 = b.e ** 2
    terms = [
        ("T0", m.T0),
        ("exp(-96B/(23A))", b.exp(-96 * B / (23 * A))),
        ("exp(0.324B/((e^2-1.296)A))", b.exp(b.num("0.324") * B / ((e2 - b.num("1.296")) * A))),
        ("8c1/(3A)", 8 * m.c1 / (3 * A)),
        ("8c2/(3A W0(16c2/(3A)))", _x_over_w0(16 * m.c2 / (3 * A), b) / 2),
        ("96C1/(23A)", 96 * m.C1 / (23 * A)),
        ("96C2/(23A W0(96C2/(23A)))", _x_over_w0(96 * m.C2 / (23 * A), b)),
        ("sqrt(192C3/(23A W0(192C3/(23A))))", b.sqrt(_x_over_w0(192 * m.C3 / (23 * A), b))),
    ]
    value = max(v for _, v in terms)
    return Bound(value, _binding(terms), terms)


def theorem2_R_cap(model, T, tau, backend=FLOAT):
    """Largest admissible ``R`` at height ``T``."""
    b = backend
    K = k3(promote(model, b), b.num(T), b.num(tau), b)
    if not K > 0:
        raise InadmissibleError(f"K3 not positive at T={T} (K3={float(K):.6g})")
    n_count = count_estimate_integer(model, T)
    if n_count < 1:
        raise InadmissibleError(f"zero count estimate is 0 at T={T}")
    return b.exp(4 * b.w0(b.sqrt(K / (4 * b.e ** 2 * n_count))))


def _interval_arg(model, T, tau, R, n_count, b):
    K = k3(promote(model, b), b.num(T), b.num(tau), b)
    L = log_r(R, b)
    return -(L / 2) * b.sqrt(n_count / K) * b.exp(L / 4), L


def theorem2_unclipped(model, T, tau, R):
    """Closed-form endpoints before ``n1`` is clipped to ``T/(e tau)``."""
    _check_common(tau, R)
    floor_ = theorem2_T_floor(model)
    if not T > floor_.value:
        raise InadmissibleError(f"T={T} does not exceed the floor {floor_.value:.6g} ({floor_.binding})")
    K = k3(model, T, tau)
    if not K > 0:
        raise InadmissibleError(f"K3 not positive at T={T}")
    n_count = count_estimate_integer(model, T)
    if n_count < 1:
        raise InadmissibleError(f"zero count estimate is 0 at T={T}")
    arg, _ = _interval_arg(model, T, tau, R, n_count, FLOAT)
    if arg < -1 / math.e and not math.isclose(arg, -1 / math.e, rel_tol=1e-15):
        raise InadmissibleError(
            f"W argument {arg:.17g} below -1/e: R exceeds the cap {theorem2_R_cap(model, T, tau):.17g}"
        )
    return _closed_form_endpoints(model, T, tau, R, n_count)


def _closed_form_endpoints(model, T, tau, R, n_count):
    def endpoint(branch):
        def expr(b):
            a, L = _interval_arg(model, T, tau, R, n_count, b)
            a = max(a, -1 / b.e)
            w = b.w0(a) if branch == 0 else b.wm1(a)
            return b.num(1) / 2 - 2 / L * w
        return expr

    return max(1, hardened_ceil(endpoint(0))), hardened_floor(endpoint(-1))


def theorem2_interval(model, T, tau, R):
    """Closed-form ``(n0, n1)``; raises :class:`InadmissibleError` when the
    hypotheses on ``T`` or ``R`` fail or the interval is empty."""
    n0, raw_n1 = theorem2_unclipped(model, T, tau, R)
    n_cap = hardened_floor(lambda b: b.num(T) / (b.e * b.num(tau)))
    n1 = min(n_cap, raw_n1)
    if n0 > n1:
        raise InadmissibleError(f"empty interval: n0={n0} > n1={n1}")
    return n0, n1


def direct_scan_values(K3, N_count, R, n_max):
    """``f(n) = K3 n (n-1) + N (1 - R^n)`` for ``n = 2..n_max``."""
    L = log_r(R)
    return [(n, K3 * n * (n - 1) - N_count * math.expm1(n * L)) for n in range(2, int(n_max) + 1)]


def interval_direct(K3, N_count, R, n_max):
    """Scan ``f(n)`` and return the leading non-negative run ``(n0, n1)``.

    ``n0 = 1`` when ``f(2) >= 0`` (``n = 1`` is always admissible).  Warns if
    the non-negative set splits into several runs.
    """
    if not K3 > 0:
        raise DomainError("K3 must be positive")
    if N_count < 1:
        raise DomainError("N_count must be at least 1")
    if n_max < 2:
        raise DomainError("n_max must be at least 2")
    values = direct_scan_values(K3, N_count, R, n_max)
    runs = []
    for n, f in values:
        if f >= 0:
            if runs and runs[-1][1] == n - 1:
                runs[-1][1] = n
            else:
                runs.append([n, n])
    if not runs:
        raise InadmissibleError(f"no admissible n in [2, {n_max}]")
    if len(runs) > 1:
        warnings.warn(f"non-negative set is not contiguous: runs {runs}", RuntimeWarning, stacklevel=2)
    start, end = runs[0]
    n0 = 1 if start == 2 else start
    return n0, end


def theorem2(model, T, tau, R, direct=False):
    """Full negativity-criterion report at height ``T``.

    With ``direct=True`` the interval comes from scanning
    ``K3 n(n-1) + N(T)(1 - R^n)`` up to ``floor(T/(e tau))``.
    """
    _check_common(tau, R)
    report = ThresholdReport(theorem="main2", tau=tau, R=R, T=T)
    floor_ = theorem2_T_floor(model)
    report.diagnostics.append(("T_floor", float(floor_.value)))
    report.diagnostics.append(("T_floor binding", floor_.binding))
    K = k3(model, T, tau)
    n_count = count_estimate_integer(model, T)
    n_max = hardened_floor(lambda b: b.num(T) / (b.e * b.num(tau)))
    report.diagnostics += [("K3", K), ("N_F(T)", n_count), ("floor(T/(e tau))", n_max)]
    try:
        cap = theorem2_R_cap(model, T, tau)
        report.diagnostics.append(("R_cap", cap))
    except InadmissibleError as exc:
        cap = None
        report.diagnostics.append(("R_cap", str(exc)))
    try:
        if direct:
            report.n0, report.n1 = interval_direct(K, n_count, R, n_max)
        else:
            report.n0, report.n1 = theorem2_interval(model, T, tau, R)
    except (InadmissibleError, DomainError) as exc:
        report.admissible = False
        report.reason = str(exc)
    return report


# ----------------------------------------------------------------------------
# single exceptional zero


def _theorem3_terms(model, tau, R, b):
    m = promote(model, b)
    tau = b.num(tau)
    L = log_r(R, b)
    terms = [("T0/(e tau)", m.T0 / (b.e * tau))]
    if L <= 3 / (2 * b.e):
        terms.append(("exp(-W-1(-2 log R/3))", b.exp(-b.wm1(-2 * L / 3))))
    else:
        terms.append(("e", b.e))
    K = k1(m, tau, b) + k4(m, tau, b)
    terms.append(("12 log(40(0.5+K1+K4))/log R", 12 * b.log(40 * (b.num("0.5") + K)) / L))
    return terms


def theorem3_N(model, tau, R):
    """Threshold ``N`` for the exceptional-zero detector; grid ``N..5N``."""
    _check_common(tau, R)
    terms = _theorem3_terms(model, tau, R, FLOAT)
    N = hardened_ceil(lambda b: max(v for _, v in _theorem3_terms(model, tau, R, b)))
    return ThresholdReport(
        theorem="exp1",
        tau=tau,
        R=R,
        N=N,
        grid_max=5 * N,
        binding=_binding(terms),
        diagnostics=_floats(terms),
    )


def detector_threshold(n, model, tau):
    """``(K1 + K4) n log n``."""
    if n < math.e:
        raise DomainError(f"n must be at least e, got {n}")
    return (k1(model, tau) + k4(model, tau)) * n * math.log(n)
