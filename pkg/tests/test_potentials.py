"""Effective potentials and the Hermitian hydrogen-like reference states."""

from __future__ import annotations

import numpy as np
import pytest

import gamowsusy as gs
from gamowsusy.errors import DomainError

from conftest import coulomb_vfun


class TestEffectivePotential:
    @pytest.mark.parametrize(
        "ell,r,expected",
        [(0, 1.0, -2.0), (1, 1.0, 0.0), (2, 2.0, 0.5)],
    )
    def test_coulomb_values(self, ell, r, expected):
        assert gs.effective_potential(gs.RadialModel(ell=ell), r) == pytest.approx(expected)

    def test_r_must_be_positive(self):
        with pytest.raises(DomainError):
            gs.effective_potential(gs.RadialModel(ell=0), 0.0)
        with pytest.raises(DomainError):
            gs.effective_potential(gs.RadialModel(ell=0), np.array([1.0, -2.0]))

    def test_model_validation(self):
        with pytest.raises(DomainError):
            gs.RadialModel(ell=-1)
        with pytest.raises(DomainError):
            gs.RadialModel(ell=0, coupling=-1.0)
        with pytest.raises(DomainError):
            gs.RadialModel(ell=0, potential_id="custom-tabulated")

    def test_custom_potential(self):
        m = gs.RadialModel(ell=1, potential_id="custom-tabulated", coupling=0.0,
                           v_func=lambda r: -1.0 / r**2)
        assert gs.effective_potential(m, 1.0) == pytest.approx(1.0)


class TestHydrogenBoundState:
    def test_ground_state_closed_form(self, default_grid):
        st = gs.hydrogen_bound_state(1, 0, default_grid)
        assert st.energy == -1.0
        r = default_grid.points
        ref = 2.0 * r * np.exp(-r)  # textbook normalization
        dev = np.max(np.abs(st.wavefunction.values - ref))
        assert dev < 1e-6

    def test_n2_l1_closed_form(self, default_grid):
        st = gs.hydrogen_bound_state(2, 1, default_grid)
        assert st.energy == -0.25
        r = default_grid.points
        raw = r**2 * np.exp(-r / 2)
        ref = raw / np.sqrt(24.0)  # integral of r^4 e^{-r} is 4! = 24
        assert np.max(np.abs(st.wavefunction.values - ref)) < 1e-6

    def test_n3_l1_normalization_constant(self, default_grid):
        # quadrature oracle: the unnormalized norm^2 is 2187/32 exactly
        st = gs.hydrogen_bound_state(3, 1, default_grid)
        r = default_grid.points
        raw = r**2 * np.exp(-r / 3) * (1 - r / 6)
        const = np.sqrt(32.0 / 2187.0)
        assert np.max(np.abs(st.wavefunction.values - const * raw)) < 1e-5

    def test_schrodinger_residual(self, default_grid):
        for n, ell in [(1, 0), (2, 1), (3, 1), (3, 2)]:
            st = gs.hydrogen_bound_state(n, ell, default_grid)
            res = gs.schrodinger_residual(st.wavefunction, coulomb_vfun(ell), st.energy)
            assert res <= 1e-5, (n, ell, res)

    def test_no_state_below_ell(self):
        with pytest.raises(DomainError):
            gs.hydrogen_bound_state(1, 1, gs.RadialGrid.make())

    def test_orthonormality(self, wide_grid):
        states = [gs.hydrogen_bound_state(n, 1, wide_grid) for n in (2, 3, 4, 5)]
        for i, si in enumerate(states):
            for j, sj in enumerate(states):
                ip = gs.inner_product(si.wavefunction, sj.wavefunction).value
                target = 1.0 if i == j else 0.0
                assert abs(ip - target) <= 1e-6, (i, j, ip)

    def test_node_count(self, wide_grid):
        # psi_n has n - ell - 1 interior nodes
        for n, ell in [(2, 1), (3, 1), (4, 1), (5, 1), (3, 0)]:
            st = gs.hydrogen_bound_state(n, ell, wide_grid)
            vals = st.wavefunction.values.real
            signs = np.sign(vals[np.abs(vals) > 1e-9 * np.max(np.abs(vals))])
            nodes = int(np.sum(signs[1:] != signs[:-1]))
            assert nodes == n - ell - 1, (n, ell, nodes)

    def test_energy_ordering(self, wide_grid):
        energies = [gs.hydrogen_bound_state(n, 1, wide_grid).energy for n in (2, 3, 4, 5)]
        assert all(e < 0 for e in energies)
        assert energies == sorted(energies)
