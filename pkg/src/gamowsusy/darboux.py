"""Complex factorization machinery: superpotential, partner, mapped states.

The transformation function w (ordinary or generalized Gamow) defines the
superpotential beta = -w'/w, which solves the Riccati equation
-beta' + beta^2 + eps = V_l.  Reordering the first-order factors shifts the
Hamiltonian by 2 beta', producing a generally complex partner potential
v = V_l + 2 beta' = 2 beta^2 + 2 eps - V_l whose discrete spectrum repeats the
original one, optionally extended by the single eigenvalue eps carried by
1/w.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from . import _ddcore
from .errors import DomainError, NodeError, NormalizationError
from .gamow import GamowSpec
from .numerics import ComplexField, RadialGrid, norm_squared
from .potentials import BoundState, RadialModel, effective_potential
from .specfun import ValueDeriv, _check

__all__ = [
    "Superpotential",
    "PartnerPotential",
    "TransformedState",
    "superpotential",
    "partner_potential",
    "darboux_map",
    "apply_b",
    "transform_bound_state",
    "extra_eigenstate",
    "normalize",
]

_NODE_REL = 1e-12


@dataclass(frozen=True)
class Superpotential:
    """beta(r) = -w'(r)/w(r) for the transformation function of ``source``."""

    source: GamowSpec

    @property
    def epsilon(self) -> complex:
        return self.source.epsilon

    @property
    def model(self) -> RadialModel:
        return RadialModel(ell=self.source.ell)

    def _wave(self, r: float):
        w, dw, scale, est, status = _ddcore.wave_point(
            self.source.ell, self.source.k.k, self.source.xi, r
        )
        _check(status, est, "transformation function")
        # the magnitude envelope alone collapses together with w at a real
        # node, so the derivative provides the local length scale
        if abs(w) < _NODE_REL * (scale + r * abs(dw)):
            raise NodeError("transformation function has a (near-)node", r)
        return w, dw

    def beta(self, r: float) -> complex:
        if r <= 0.0:
            raise DomainError("r must be positive")
        w, dw = self._wave(r)
        return -dw / w

    def beta_prime(self, r: float) -> complex:
        """beta' from the Riccati identity beta' = beta^2 + eps - V_l."""
        b = self.beta(r)
        return b * b + self.epsilon - effective_potential(self.model, r)

    def beta_grid(self, grid: RadialGrid) -> np.ndarray:
        w, dw, scale, est, status = _ddcore.wave_grid(
            self.source.ell, self.source.k.k, self.source.xi, grid.points
        )
        _check(status, est, "transformation function")
        bad = np.abs(w) < _NODE_REL * (scale + grid.points * np.abs(dw))
        if np.any(bad):
            raise NodeError(
                "transformation function has a (near-)node",
                float(grid.points[np.argmax(bad)]),
            )
        return -dw / w


def superpotential(spec: GamowSpec) -> Superpotential:
    """Build the superpotential; node checks happen lazily at evaluation."""
    return Superpotential(source=spec)


@dataclass(frozen=True)
class PartnerPotential:
    """The (generally complex) potential of the partner Hamiltonian."""

    superpotential: Superpotential

    @property
    def base(self) -> RadialModel:
        return self.superpotential.model

    def evaluate(self, r: Union[float, np.ndarray]):
        """v(r) = 2 beta^2 + 2 eps - V_l (the Riccati-reduced form)."""
        if np.ndim(r):
            grid = RadialGrid(points=np.asarray(r, dtype=float))
            b = self.superpotential.beta_grid(grid)
        else:
            b = self.superpotential.beta(float(r))
        eps = self.superpotential.epsilon
        return 2.0 * b * b + 2.0 * eps - effective_potential(self.base, r)

    def evaluate_via_shift(self, r: Union[float, np.ndarray]):
        """v(r) = V_l + 2 beta'; must agree with :meth:`evaluate`."""
        if np.ndim(r):
            grid = RadialGrid(points=np.asarray(r, dtype=float))
            b = self.superpotential.beta_grid(grid)
            vl = effective_potential(self.base, r)
            bp = b * b + self.superpotential.epsilon - vl
            return vl + 2.0 * bp
        return effective_potential(self.base, r) + 2.0 * self.superpotential.beta_prime(
            float(r)
        )


def partner_potential(sp: Superpotential) -> PartnerPotential:
    return PartnerPotential(superpotential=sp)


@dataclass(frozen=True)
class TransformedState:
    """Eigenstate of the partner Hamiltonian with eigenvalue ``lam``."""

    psi: ComplexField
    lam: complex
    norm: Optional[float]
    divergent: bool = False

    @property
    def eigenvalue(self) -> complex:
        return self.lam


def darboux_map(phi: ValueDeriv, sp: Superpotential, r: float) -> complex:
    """B phi at r: phi' + beta phi, identically W(w, phi)/w."""
    return phi.deriv + sp.beta(r) * phi.value


def apply_b(field: ComplexField, sp: Superpotential) -> ComplexField:
    """B applied on a grid; the input field must carry its derivative.

    The output derivative uses (B phi)' = phi'' + beta' phi + beta phi' with
    phi'' unavailable, so it is only attached when the input solves the base
    equation at a known eigenvalue; use :func:`transform_bound_state` for
    that.  Here deriv is left out.
    """
    if field.deriv is None:
        raise DomainError("apply_b needs the analytic derivative of the input")
    b = sp.beta_grid(field.grid)
    return ComplexField(grid=field.grid, values=field.deriv + b * field.values)


def transform_bound_state(state: BoundState, sp: Superpotential) -> TransformedState:
    """Psi_n = B psi_n, an eigenstate of the partner at the unchanged E_n.

    The derivative attaches analytically through psi'' = (V_l - E_n) psi.
    """
    if state.ell != sp.source.ell:
        raise DomainError("bound state and superpotential have different ell")
    grid = state.wavefunction.grid
    psi = state.wavefunction.values
    dpsi = state.wavefunction.deriv
    if dpsi is None:
        raise DomainError("bound state must carry its derivative")
    b = sp.beta_grid(grid)
    vl = effective_potential(sp.model, grid.points)
    bp = b * b + sp.epsilon - vl
    values = dpsi + b * psi
    deriv = (vl - state.energy) * psi + bp * psi + b * dpsi
    field = ComplexField(grid=grid, values=values, deriv=deriv)
    qn = norm_squared(field)
    if qn.divergent:
        return TransformedState(psi=field, lam=state.energy, norm=None, divergent=True)
    return TransformedState(
        psi=field, lam=state.energy, norm=float(np.sqrt(qn.real_value))
    )


def extra_eigenstate(sp: Superpotential, grid: RadialGrid) -> TransformedState:
    """The kernel of A: Psi_eps = 1/w with eigenvalue eps.

    For the ordinary Gamow function (xi = 0) the r^{-l-1} origin behavior
    makes |Psi|^2 non-integrable and the state is flagged divergent; with
    xi != 0 and l >= 1 the origin softens to r^l and the outgoing growth of w
    turns into decay of 1/w, giving a finite norm.
    """
    spec = sp.source
    w, dw, scale, est, status = _ddcore.wave_grid(
        spec.ell, spec.k.k, spec.xi, grid.points
    )
    _check(status, est, "transformation function")
    bad = np.abs(w) < _NODE_REL * (scale + grid.points * np.abs(dw))
    if np.any(bad):
        raise NodeError(
            "transformation function has a (near-)node",
            float(grid.points[np.argmax(bad)]),
        )
    values = 1.0 / w
    deriv = -dw / (w * w)
    field = ComplexField(grid=grid, values=values, deriv=deriv)
    qn = norm_squared(field)
    if qn.divergent:
        return TransformedState(psi=field, lam=sp.epsilon, norm=None, divergent=True)
    return TransformedState(psi=field, lam=sp.epsilon, norm=float(np.sqrt(qn.real_value)))


def normalize(state: TransformedState) -> TransformedState:
    """Scale to unit norm; phase fixed real-positive at the max-modulus point."""
    if state.divergent or state.norm is None:
        raise NormalizationError("cannot normalize a divergent state")
    vals = state.psi.values
    i_max = int(np.argmax(np.abs(vals)))
    scale = 1.0 / state.norm
    phase = vals[i_max] / abs(vals[i_max])
    factor = scale / phase
    new_vals = vals * factor
    new_deriv = None if state.psi.deriv is None else state.psi.deriv * factor
    field = ComplexField(grid=state.psi.grid, values=new_vals, deriv=new_deriv)
    qn = norm_squared(field)
    return replace(state, psi=field, norm=float(np.sqrt(qn.real_value)))
