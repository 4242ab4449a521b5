"""Exception types raised across the package."""


class DomainError(ValueError):
    """A parameter lies outside the domain of a formula."""


class StripViolation(DomainError):
    """A zero lies outside ``0 <= Re(rho) < tau``."""


class ZeroFileError(ValueError):
    """Malformed zero or model file; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SingularityError(ZeroDivisionError):
    """The Mobius map was evaluated at (or numerically at) ``rho = tau``."""


class TermOverflow(OverflowError):
    """``|rho/(rho - tau)|**n`` left the double range.

    ``sign`` is the sign of ``Re(1 - w**n)`` as n -> overflow, i.e. the
    negated sign of ``cos(n * arg w)``.
    """

    def __init__(self, message, sign, log_modulus):
        super().__init__(message)
        self.sign = sign
        self.log_modulus = log_modulus


class InfeasibleError(ValueError):
    """Requested synthetic zero configuration cannot meet the count envelopes."""


class InadmissibleError(ValueError):
    """Theorem hypotheses fail for the requested parameters."""
