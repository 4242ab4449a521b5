"""Zero-counting models, the built-in catalog, zero files and synthetic zeros.

A :class:`ZeroCountModel` holds the constants of the explicit counting
bounds

    |N(T) - A T log T - B T| < C1 log T + C2 + C3 / T,              T >= T0
    |N(T, 2T) - A T log T - (A log 4 + B) T| < c1 log T + c2 + c3 / T

where ``N(T)`` counts zeros with ``|Im rho| <= T`` and ``N(T, 2T)`` those with
``T < |Im rho| <= 2T``.  Zeros are counted with multiplicity.
"""

import io
import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from ._numeric import FLOAT, hardened_floor
from .errors import DomainError, InfeasibleError, StripViolation, ZeroFileError

__all__ = [
    "ZeroCountModel",
    "ZeroSet",
    "count_upper",
    "count_lower",
    "count_estimate_integer",
    "dyadic_count_upper",
    "dyadic_count_lower",
    "derive_dyadic_constants",
    "catalog_dirichlet",
    "catalog_newform",
    "promote",
    "load_zeros",
    "dump_zeros",
    "load_model",
    "dump_model",
    "synthesize_zeros",
    "envelope_audit",
]

MODEL_KEYS = ("A_F", "B_F", "T0", "C1", "C2", "C3", "c1", "c2", "c3")
STRIP_TOL = 1e-12
NEWFORM_KNOWN_COUNT_AT_27 = 14


@dataclass(frozen=True)
class ZeroCountModel:
    A_F: float
    B_F: float
    T0: float
    C1: float = 0.0
    C2: float = 0.0
    C3: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    c3: float = 0.0
    # ("dirichlet", q) / ("newform",): lets promote() rebuild exactly.
    source: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.A_F > 0:
            raise DomainError(f"A_F must be positive, got {self.A_F}")
        if not self.T0 > 0:
            raise DomainError(f"T0 must be positive, got {self.T0}")
        for name in ("C1", "C2", "C3", "c1", "c2", "c3"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be non-negative, got {getattr(self, name)}")
        # The dyadic constants can always be taken from the C's; larger c's
        # than that are legal but suspicious.
        log2 = math.log(2.0)
        slack = 1e-12
        if (
            self.c1 > 2 * self.C1 * (1 + slack) + slack
            or self.c2 > (2 * self.C2 + self.C1 * log2) * (1 + slack) + slack
            or self.c3 > 1.5 * self.C3 * (1 + slack) + slack
        ):
            warnings.warn(
                "dyadic constants exceed the bounds implied by C1..C3 "
                "(c1 <= 2 C1, c2 <= 2 C2 + C1 log 2, c3 <= 1.5 C3)",
                stacklevel=3,
            )

    def values(self):
        return {k: getattr(self, k) for k in MODEL_KEYS}


def _check_T(model, T):
    if T < model.T0:
        raise DomainError(f"T={T} is below T0={model.T0}")


def _main_term(model, T, b=FLOAT):
    return model.A_F * T * b.log(T) + model.B_F * T


def _error_term(model, T, b=FLOAT):
    return model.C1 * b.log(T) + model.C2 + model.C3 / T


def count_upper(model, T, backend=FLOAT):
    """Upper envelope for the number of zeros with ``|Im rho| <= T``."""
    _check_T(model, T)
    return _main_term(model, T, backend) + _error_term(model, T, backend)


def count_lower(model, T, backend=FLOAT):
    _check_T(model, T)
    return max(0, _main_term(model, T, backend) - _error_term(model, T, backend))


def count_estimate_integer(model, T):
    """Conservative integer zero count: ``floor(count_upper)``."""
    _check_T(model, T)
    return max(0, hardened_floor(lambda b: count_upper(promote(model, b), b.num(T), b)))


def _dyadic_parts(model, T, b=FLOAT):
    main = model.A_F * T * b.log(T) + (model.A_F * b.log(4) + model.B_F) * T
    err = model.c1 * b.log(T) + model.c2 + model.c3 / T
    return main, err


def dyadic_count_upper(model, T, backend=FLOAT):
    """Upper envelope for the number of zeros with ``T < |Im rho| <= 2T``."""
    _check_T(model, T)
    main, err = _dyadic_parts(model, T, backend)
    return main + err


def dyadic_count_lower(model, T, backend=FLOAT):
    _check_T(model, T)
    main, err = _dyadic_parts(model, T, backend)
    return max(0, main - err)


def derive_dyadic_constants(model):
    """The (c1, c2, c3) implied by the C constants alone."""
    return (2 * model.C1, 2 * model.C2 + model.C1 * math.log(2.0), 1.5 * model.C3)


def catalog_dirichlet(q, backend=FLOAT):
    """Model for a Dirichlet L-function of a primitive character mod ``q``."""
    if int(q) != q or q < 3:
        raise DomainError(f"Dirichlet modulus must be an integer >= 3, got {q}")
    q = int(q)
    b = backend
    n = b.num
    log_q = b.log(n(q))
    A = 1 / b.pi
    return ZeroCountModel(
        A_F=A,
        B_F=A * b.log(n(q) / (2 * b.pi * b.e)),
        T0=n(1),
        C1=n("0.317"),
        C2=n("0.317") * log_q + n("6.401"),
        C3=n(0),
        c1=n("0.634"),
        c2=n("0.317") * b.log(n(2)) + n("0.634") * log_q + n("12.802"),
        c3=n(0),
        source=("dirichlet", q),
    )


def catalog_newform(backend=FLOAT):
    """Model for the level 1, weight 12 newform L-function.

    Returns ``(model, known_count_at_27)``.  The dyadic constants are the
    sharper published values, not the ones derived from C1..C3.
    """
    b = backend
    n = b.num
    model = ZeroCountModel(
        A_F=1 / b.pi,
        B_F=-(1 + b.log(4 * b.pi ** 2)) / b.pi,
        T0=n(27),
        C1=n(586),
        C2=n(3904),
        C3=n(23274),
        c1=n(864),
        c2=n(3622),
        c3=n(21012),
        source=("newform",),
    )
    return model, NEWFORM_KNOWN_COUNT_AT_27


def promote(model, backend):
    """Re-express ``model`` in ``backend`` arithmetic.

    Catalog models are rebuilt from their defining formulas; user models are
    converted field by field (decimal reading of floats).
    """
    if backend.name == "float":
        return model
    if model.source and model.source[0] == "dirichlet":
        return catalog_dirichlet(model.source[1], backend)
    if model.source and model.source[0] == "newform":
        return catalog_newform(backend)[0]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return replace(model, **{k: backend.num(v) for k, v in model.values().items()})


# ----------------------------------------------------------------------------
# zero sets and files


@dataclass(frozen=True)
class ZeroSet:
    """Finite multiset of zeros in the strip ``0 <= Re(rho) < tau``.

    No conjugates or reflections are added: every zero to be summed must be
    listed, repeated according to multiplicity.
    """

    zeros: tuple
    tau: float

    def __post_init__(self):
        if not self.tau > 0:
            raise DomainError(f"tau must be positive, got {self.tau}")
        zs = tuple(complex(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zs)
        for i, z in enumerate(zs):
            _check_strip(z, self.tau, f"zero #{i}")

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def count(self, T):
        """Number of zeros with ``|Im rho| <= T``."""
        return sum(1 for z in self.zeros if abs(z.imag) <= T)

    def count_window(self, lo, hi):
        return sum(1 for z in self.zeros if lo < abs(z.imag) <= hi)

    def max_height(self):
        return max((abs(z.imag) for z in self.zeros), default=0.0)


def _check_strip(z, tau, where):
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise StripViolation(f"{where}: non-finite zero {z!r}")
    if z.real < 0:
        raise StripViolation(f"{where}: Re(rho)={z.real!r} < 0")
    if z.real > tau:
        raise StripViolation(f"{where}: Re(rho)={z.real!r} > tau={tau!r}")
    if abs(z.real - tau) <= STRIP_TOL * max(1.0, tau):
        raise StripViolation(f"{where}: Re(rho)={z.real!r} equals tau (zero at the excluded line)")


def _text_stream(source):
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8")


def load_zeros(source, tau):
    """Parse a zero file (``<re>\\t<im>`` per line, ``#`` comments).

    ``source`` may be bytes, a str holding the file text, or a binary/text
    stream.  Use ``open(path, "rb")`` for paths.
    """
    zeros = []
    for lineno, raw in enumerate(_text_stream(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ZeroFileError(f"expected '<re>\\t<im>', got {raw.rstrip()!r}", lineno)
        try:
            z = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise ZeroFileError(f"cannot parse numbers in {raw.rstrip()!r}", lineno) from None
        try:
            _check_strip(z, tau, f"line {lineno}")
        except StripViolation as exc:
            exc.line = lineno
            raise
        zeros.append(z)
    return ZeroSet(tuple(zeros), tau)


def dump_zeros(zero_set, stream=None):
    """Serialize a zero set; returns the text when ``stream`` is None."""
    text = "".join(f"{z.real!r}\t{z.imag!r}\n" for z in zero_set.zeros)
    if stream is None:
        return text
    stream.write(text)


def load_model(source, name=None):
    """Parse ``key = value`` lines with exactly the keys A_F..c3."""
    values = {}
    for lineno, raw in enumerate(_text_stream(source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ZeroFileError(f"expected 'key = value', got {raw.rstrip()!r}", lineno)
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in MODEL_KEYS:
            raise ZeroFileError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ZeroFileError(f"duplicate key {key!r}", lineno)
        try:
            values[key] = float(val)
        except ValueError:
            raise ZeroFileError(f"bad value for {key}: {val!r}", lineno) from None
    missing = [k for k in MODEL_KEYS if k not in values]
    if missing:
        raise ZeroFileError(f"missing keys: {', '.join(missing)}")
    return ZeroCountModel(**values)


def dump_model(model):
    return "".join(f"{k} = {float(getattr(model, k))!r}\n" for k in MODEL_KEYS)


# ----------------------------------------------------------------------------
# synthetic zeros


def _smoothed_count(model, T):
    # max(0, A T log T + B T) is non-decreasing: negative exactly before the
    # unique minimum of the main term.
    return max(0.0, _main_term(model, T)) if T > 0 else 0.0


def _height_of(model, k, height):
    """Smallest t with smoothed count >= k - 1/2 (bisection)."""
    target = k - 0.5
    lo, hi = 0.0, height
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _smoothed_count(model, mid) >= target:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-13 * hi:
            break
    return hi


def envelope_audit(model, zero_set, height, dyadic=True):
    """Check the counting envelopes on ``[T0, height]``.

    Tests every integer T, every zero ordinate and points just below them.
    Returns a list of ``(T, kind, count, lower, upper)`` violations.
    """
    heights = np.sort(np.abs(np.array([z.imag for z in zero_set.zeros], dtype=float)))
    probes = set(float(t) for t in range(math.ceil(model.T0), math.floor(height) + 1))
    probes.update(float(t) for t in heights)
    probes.update(float(np.nextafter(t, 0)) for t in heights)
    probes.add(float(model.T0))
    probes.add(float(height))
    bad = []
    for T in sorted(probes):
        if T < model.T0 or T > height:
            continue
        n = int(np.searchsorted(heights, T, side="right"))
        lo, up = count_lower(model, T), count_upper(model, T)
        if not lo <= n <= up:
            bad.append((T, "N(T)", n, lo, up))
        if dyadic and 2 * T <= height:
            m = int(np.searchsorted(heights, 2 * T, side="right")) - n
            dlo, dup = dyadic_count_lower(model, T), dyadic_count_upper(model, T)
            if not dlo <= m <= dup:
                bad.append((T, "N(T,2T)", m, dlo, dup))
    return bad


def synthesize_zeros(model, height, fraction_off_line, R_off, tau, seed):
    """Deterministic synthetic zero multiset obeying the model's envelopes.

    Ordinates follow the smoothed main term ``A T log T + B T`` (one zero per
    unit of count, each with a random sign).  A ``fraction_off_line`` share of
    them is moved into the region ``|rho/(rho - tau)| >= R_off``; only zeros
    low enough to fit inside that region are eligible.
    """
    if height < model.T0:
        raise DomainError(f"height={height} below T0={model.T0}")
    if not 0.0 <= fraction_off_line <= 1.0:
        raise DomainError("fraction_off_line must lie in [0, 1]")
    if not R_off > 1:
        raise DomainError("R_off must exceed 1")
    rng = np.random.default_rng(seed)

    total = int(math.floor(_smoothed_count(model, height) + 0.5))
    ords = np.array([_height_of(model, k, height) for k in range(1, total + 1)], dtype=float)
    signs = rng.choice([-1.0, 1.0], size=total)
    re = np.full(total, tau / 2.0)

    n_off = int(round(fraction_off_line * total))
    if n_off:
        h_max = tau / math.sqrt(R_off * R_off - 1.0)
        eligible = np.flatnonzero(ords < h_max)
        if eligible.size < n_off:
            raise InfeasibleError(
                f"{n_off} off-line zeros requested but only {eligible.size} ordinates lie "
                f"below the region height {h_max:.6g}; C constants too small for this placement"
            )
        chosen = rng.choice(eligible, size=n_off, replace=False)
        center = tau * R_off ** 2 / (R_off ** 2 - 1.0)
        radius = tau * R_off / (R_off ** 2 - 1.0)
        for j in chosen:
            t = ords[j]
            half = math.sqrt(max(radius * radius - t * t, 0.0))
            lo = center - half
            hi = min(tau * (1 - 1e-9), center + half)
            if hi <= lo:
                raise InfeasibleError(f"no room for an off-line zero at height {t:.6g}")
            re[j] = rng.uniform(lo, hi)

    zs = ZeroSet(tuple(complex(r, s * t) for r, s, t in zip(re, signs, ords)), tau)
    bad = envelope_audit(model, zs, height)
    if bad:
        T, kind, n, lo, up = bad[0]
        raise InfeasibleError(
            f"generated set violates {kind} envelope at T={T:.6g}: count {n} not in [{lo:.6g}, {up:.6g}]"
        )
    return zs
