"""Confluent hypergeometric functions for complex argument and integer c.

Provides Kummer's function M(a, c, z) and the second (singular) solution
U(a, c, z) together with their z-derivatives, restricted to positive integer
c, which is the case needed by the radial Coulomb problem.  Integer c makes
the usual connection formula for U singular, so U is assembled from the
classical logarithmic expansion at small and moderate |z| and from the
optimally truncated asymptotic expansion beyond |z| = 30.

Accuracy envelope (validated against an arbitrary-precision series oracle in
the test suite): M to ~1e-12 relative wherever the running condition estimate
stays small, and U to 1e-8 relative for moderate parameters
(2 Re(a) - c + 1 <= 6, |Im a| <= 0.75, 0.01 <= |z| <= 60).  Every evaluation
carries a running error estimate; an AccuracyError is raised when it exceeds
1e-6.  All functions are pure and reentrant.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from . import _ddcore
from .errors import AccuracyError, DomainError, RangeError

__all__ = ["HypParams", "ValueDeriv", "kummer_m", "tricomi_u"]


@dataclass(frozen=True)
class HypParams:
    """Arguments (a, c, z) of a confluent hypergeometric evaluation.

    c must be a positive integer; a and z are finite complex numbers.
    """

    a: complex
    c: int
    z: complex

    def __post_init__(self):
        if not isinstance(self.c, int) or self.c < 1:
            raise DomainError(f"c must be a positive integer, got {self.c!r}")
        a = complex(self.a)
        z = complex(self.z)
        if not (cmath.isfinite(a) and cmath.isfinite(z)):
            raise DomainError("a and z must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", z)


@dataclass(frozen=True)
class ValueDeriv:
    """A function value bundled with its derivative."""

    value: complex
    deriv: complex


_STATUS_MESSAGES = {
    2: "z = 0 is outside the domain of U",
    4: "series did not converge within the term budget",
}


def _check(status: float, est: float, what: str) -> None:
    if status == 0:
        return
    if status == 1:
        raise AccuracyError(f"loss of significance in {what}", est)
    if status == 3:
        raise AccuracyError(
            f"{what}: parameter within 1e-8 of an expansion pole", est
        )
    if status == 2:
        raise DomainError(_STATUS_MESSAGES[2])
    raise RangeError(_STATUS_MESSAGES.get(status, f"{what} failed"))


def kummer_m(p: HypParams) -> ValueDeriv:
    """Kummer's function M(a, c, z) = 1F1(a; c; z) and its z-derivative.

    The derivative uses the contiguous relation M' = (a/c) M(a+1, c+1, z).
    Series are summed in extended internal precision with the reflection
    M(a,c,z) = e^z M(c-a, c, -z) applied for Re(z) < 0.
    """
    m, dm, est, status = _ddcore.kummer_pair(
        p.a.real, p.a.imag, p.c, p.z.real, p.z.imag
    )
    _check(status, est, "M(a,c,z)")
    return ValueDeriv(m, dm)


def tricomi_u(p: HypParams) -> ValueDeriv:
    """Tricomi's function U(a, c, z) and its z-derivative (principal branch).

    Integer c is the logarithmic case: for |z| <= 30 the value comes from the
    finite sum + log(z)-series expansion, beyond that from the optimally
    truncated asymptotic series in 1/z.  The derivative uses
    U' = -a U(a+1, c+1, z).

    Raises DomainError at z = 0 and AccuracyError when the running loss-of-
    significance estimate exceeds 1e-6 or a sits within 1e-8 of a pole of the
    expansion coefficients (nonpositive-integer a - c + 1).
    """
    if p.z == 0:
        raise DomainError(_STATUS_MESSAGES[2])
    u, du, est, status = _ddcore.tricomi_pair(
        p.a.real, p.a.imag, p.c, p.z.real, p.z.imag
    )
    _check(status, est, "U(a,c,z)")
    return ValueDeriv(u, du)
