"""Effective radial potentials and the Hermitian reference bound states.

Units follow the hydrogen-like convention: energies in Ze^2/(2 r_B), lengths
in Bohr radii r_B, so the Coulomb potential is exactly -2/r and the bound
spectrum is E_n = -1/n^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from . import _ddcore
from .errors import DomainError
from .numerics import ComplexField, RadialGrid, norm_squared
from .specfun import _check

__all__ = ["RadialModel", "BoundState", "effective_potential", "hydrogen_bound_state"]


@dataclass(frozen=True)
class RadialModel:
    """Radial problem: centrifugal term l(l+1)/r^2 plus a central V(r)."""

    ell: int
    potential_id: str = "coulomb"
    coupling: float = -2.0
    v_func: Optional[Callable] = None

    def __post_init__(self):
        if self.ell < 0:
            raise DomainError("ell must be a non-negative integer")
        if self.potential_id not in ("coulomb", "custom-tabulated"):
            raise DomainError(f"unknown potential_id {self.potential_id!r}")
        if self.potential_id == "coulomb" and self.coupling != -2.0:
            raise DomainError("the Coulomb coupling is -2 in these units")
        if self.potential_id == "custom-tabulated" and self.v_func is None:
            raise DomainError("custom potential needs v_func")


def effective_potential(model: RadialModel, r: Union[float, np.ndarray]):
    """l(l+1)/r^2 + V(r); accepts scalars or arrays of positive r."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    cent = model.ell * (model.ell + 1.0) / (r_arr * r_arr)
    if model.potential_id == "coulomb":
        v = cent + model.coupling / r_arr
    else:
        v = cent + model.v_func(r_arr)
    return v if np.ndim(r) else float(v)


@dataclass(frozen=True)
class BoundState:
    """Normalized hydrogen-like bound state u_nl with E_n = -1/n^2."""

    n: int
    ell: int
    energy: float
    wavefunction: ComplexField


def hydrogen_bound_state(n: int, ell: int, grid: RadialGrid) -> BoundState:
    """Regular normalized solution r^{l+1} e^{-r/n} M(l+1-n, 2l+2, 2r/n).

    Raises DomainError when n <= ell (no such bound state).  The returned
    field carries the analytic derivative; the norm comes from grid quadrature
    with the exponential tail closure.
    """
    if n <= ell:
        raise DomainError(f"no bound state with n={n} <= ell={ell}")
    k = complex(1.0 / n, 0.0)
    w, dw, _scale, est, status = _ddcore.wave_grid(ell, k, 0.0 + 0.0j, grid.points)
    _check(status, est, "bound-state evaluation")
    field = ComplexField(grid=grid, values=w, deriv=dw)
    qn = norm_squared(field)
    if qn.divergent or qn.real_value <= 0.0:
        raise DomainError("bound state norm did not converge on this grid")
    c = 1.0 / np.sqrt(qn.real_value)
    field = ComplexField(grid=grid, values=c * w, deriv=c * dw)
    return BoundState(n=n, ell=ell, energy=-1.0 / n**2, wavefunction=field)
