"""Gamow-type transformation functions for complex factorization energy.

A Gamow function here is the regular solution of the radial Coulomb problem
with complex eigenvalue eps = -k^2, Re(k) < 0, which makes it purely outgoing
(exponentially growing) at infinity.  The generalized variant admits the
irregular r^{-l} behavior at the origin through an admixture of the second
Kummer solution U, weighted by the mixing constant xi.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from . import _ddcore
from .errors import (
    BranchError,
    ClassificationError,
    DegenerateInputError,
    DomainError,
)
from .numerics import ComplexField, RadialGrid
from .specfun import ValueDeriv, _check

__all__ = [
    "ComplexWavenumber",
    "GamowSpec",
    "EnergyClass",
    "wavenumber_from_energy",
    "classify_energy",
    "gamow_vector",
    "generalized_gamow_vector",
    "transformation_field",
    "outgoing_residual",
]

U_EVALUATION_FLOOR = 1e-4  # r below this is floating-point hostile for r^{-l}


@dataclass(frozen=True)
class ComplexWavenumber:
    """Wavenumber k with eps = -k^2, on the outgoing branch Re(k) < 0.

    The Hermitian reduction (real k > 0, decaying e^{-kr}) bypasses the
    branch check through :meth:`real_positive`.
    """

    k: complex
    _allow_real_positive: bool = field(default=False, repr=False)

    def __post_init__(self):
        k = complex(self.k)
        if not cmath.isfinite(k):
            raise DomainError("k must be finite")
        object.__setattr__(self, "k", k)
        if self._allow_real_positive:
            if not (k.imag == 0.0 and k.real > 0.0):
                raise BranchError("real_positive() requires real k > 0")
            return
        if k.real == 0.0:
            raise BranchError("purely imaginary k is not a Gamow configuration")
        if k.real > 0.0:
            raise BranchError("outgoing convention requires Re(k) < 0")

    @classmethod
    def real_positive(cls, k: float) -> "ComplexWavenumber":
        """Hermitian-SUSY constructor: real k > 0, conventional factorization."""
        return cls(complex(k), _allow_real_positive=True)

    @property
    def epsilon(self) -> complex:
        return -self.k * self.k


def wavenumber_from_energy(epsilon: complex) -> ComplexWavenumber:
    """Square root of -epsilon on the Re(k) < 0 branch.

    Real epsilon >= 0 would force purely imaginary k and is rejected with a
    BranchError.
    """
    eps = complex(epsilon)
    if eps.imag == 0.0 and eps.real >= 0.0:
        raise BranchError(
            "real nonnegative energy gives purely imaginary k; not a Gamow configuration"
        )
    s = cmath.sqrt(-eps)
    k = s if s.real < 0.0 else -s
    if k.real == 0.0:
        raise BranchError("energy lies on the branch locus Re(k) = 0")
    return ComplexWavenumber(k)


@dataclass(frozen=True)
class EnergyClass:
    """Decaying/growing classification of eps = E_R -+ i Gamma/2."""

    kind: str
    E_R: float
    Gamma: float


def classify_energy(kz: ComplexWavenumber) -> EnergyClass:
    """Sign of Im(k) picks the time behavior; Gamma = 4|k1 k2|, E_R = k2^2 - k1^2.

    E_R is reported as-is and may be negative.
    """
    k1, k2 = kz.k.real, kz.k.imag
    if k2 == 0.0:
        raise ClassificationError("real energy: neither decaying nor growing")
    return EnergyClass(
        kind="decaying" if k2 < 0.0 else "growing",
        E_R=k2 * k2 - k1 * k1,
        Gamma=4.0 * abs(k1 * k2),
    )


@dataclass(frozen=True)
class GamowSpec:
    """(l, k, xi) selecting a transformation function; xi = 0 is the ordinary one."""

    ell: int
    k: ComplexWavenumber
    xi: complex = 0.0

    def __post_init__(self):
        if self.ell < 0:
            raise DomainError("ell must be a non-negative integer")
        xi = complex(self.xi)
        if not cmath.isfinite(xi):
            raise DomainError("xi must be finite")
        object.__setattr__(self, "xi", xi)

    @property
    def epsilon(self) -> complex:
        return self.k.epsilon

    @property
    def hyp_a(self) -> complex:
        return self.ell + 1.0 - 1.0 / self.k.k

    @property
    def hyp_c(self) -> int:
        return 2 * self.ell + 2


def _wave_scalar(spec: GamowSpec, r: float) -> ValueDeriv:
    if r <= 0.0:
        raise DomainError("r must be positive")
    if spec.xi != 0.0 and r < U_EVALUATION_FLOOR:
        raise DomainError(
            f"r={r} below the evaluation floor {U_EVALUATION_FLOOR} for xi != 0"
        )
    w, dw, _scale, est, status = _ddcore.wave_point(spec.ell, spec.k.k, spec.xi, r)
    _check(status, est, "transformation function")
    return ValueDeriv(w, dw)


def gamow_vector(spec: GamowSpec, r: float) -> ValueDeriv:
    """u(r) = r^{l+1} e^{-kr} M(l+1-1/k, 2l+2, 2kr) and u'(r); requires xi = 0."""
    if spec.xi != 0.0:
        raise DomainError("gamow_vector needs xi = 0; use generalized_gamow_vector")
    return _wave_scalar(spec, r)


def generalized_gamow_vector(spec: GamowSpec, r: float) -> ValueDeriv:
    """w(r) = r^{l+1} e^{-kr} [M + xi U](2kr) and w'(r); any xi."""
    return _wave_scalar(spec, r)


def transformation_field(spec: GamowSpec, grid: RadialGrid) -> ComplexField:
    """Vectorized transformation function with analytic derivative on a grid."""
    if spec.xi != 0.0 and grid.points[0] < U_EVALUATION_FLOOR:
        raise DomainError(
            f"grid reaches below the evaluation floor {U_EVALUATION_FLOOR} for xi != 0"
        )
    w, dw, _scale, est, status = _ddcore.wave_grid(
        spec.ell, spec.k.k, spec.xi, grid.points
    )
    _check(status, est, "transformation function")
    return ComplexField(grid=grid, values=w, deriv=dw)


def outgoing_residual(u: ComplexField, kz: ComplexWavenumber, tail_start: float = 20.0) -> float:
    """max over the grid tail (r >= tail_start) of |u'/u + k|.

    The limit u'/u -> -k holds with an O(1/r) Coulomb correction, so the
    residual decays but does not vanish at finite r.  The field must carry its
    derivative and its grid must reach tail_start.
    """
    if u.deriv is None:
        raise DomainError("field must carry its derivative")
    pts = u.grid.points
    mask = pts >= tail_start
    if not np.any(mask):
        raise DomainError(f"grid tail does not reach r = {tail_start}")
    vals = u.values[mask]
    ders = u.deriv[mask]
    floor = 1e-300 + 1e-14 * float(np.max(np.abs(u.values)))
    if np.any(np.abs(vals) < floor):
        raise DegenerateInputError("u vanishes on the tail")
    return float(np.max(np.abs(ders / vals + kz.k)))
