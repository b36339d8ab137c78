"""Gamow transformation functions, spectra classification, asymptotics."""

from __future__ import annotations

import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gamowsusy as gs
from gamowsusy.errors import BranchError, ClassificationError, DegenerateInputError, DomainError

from conftest import EPS_REF, K_REF, frobenius_seed


class TestComplexWavenumber:
    @pytest.mark.parametrize("eps,k", [(-0.25, -0.5), (-1.0, -1.0)])
    def test_real_negative_energy(self, eps, k):
        kz = gs.wavenumber_from_energy(eps)
        assert kz.k == pytest.approx(k)
        assert kz.epsilon == pytest.approx(eps)

    def test_reference_energy(self):
        kz = gs.wavenumber_from_energy(EPS_REF)
        assert abs(kz.k - K_REF) < 1e-12
        assert abs(kz.epsilon - EPS_REF) < 1e-15

    def test_branch_rejections(self):
        with pytest.raises(BranchError):
            gs.wavenumber_from_energy(1.0)  # real positive
        with pytest.raises(BranchError):
            gs.wavenumber_from_energy(0.0)
        with pytest.raises(BranchError):
            gs.ComplexWavenumber(0.5 + 0.1j)  # wrong half plane
        with pytest.raises(BranchError):
            gs.ComplexWavenumber(1j)

    def test_real_positive_constructor(self):
        kz = gs.ComplexWavenumber.real_positive(0.5)
        assert kz.k == 0.5
        assert kz.epsilon == -0.25
        with pytest.raises(BranchError):
            gs.ComplexWavenumber.real_positive(-0.5)


class TestClassifyEnergy:
    def test_decaying(self):
        e = gs.classify_energy(gs.ComplexWavenumber(complex(-0.3, -0.6)))
        assert e.kind == "decaying"
        assert e.Gamma == pytest.approx(0.72)
        assert e.E_R == pytest.approx(0.27)

    def test_growing(self):
        e = gs.classify_energy(gs.ComplexWavenumber(complex(-0.3, 0.6)))
        assert e.kind == "growing"
        assert e.Gamma == pytest.approx(0.72)
        assert e.E_R == pytest.approx(0.27)

    def test_reference_is_growing_with_negative_er(self, kz_ref):
        e = gs.classify_energy(kz_ref)
        assert e.kind == "growing"
        assert e.E_R == pytest.approx(-0.2604)  # reported as-is, no sign fix
        assert e.Gamma == pytest.approx(0.208)

    def test_real_energy_rejected(self):
        with pytest.raises(ClassificationError):
            gs.classify_energy(gs.ComplexWavenumber(complex(-0.5, 0.0)))

    @settings(max_examples=30, deadline=None)
    @given(
        st.floats(min_value=-3.0, max_value=-0.01),
        st.floats(min_value=0.01, max_value=3.0),
    )
    def test_conjugation_swaps_kind(self, k1, k2):
        a = gs.classify_energy(gs.ComplexWavenumber(complex(k1, k2)))
        b = gs.classify_energy(gs.ComplexWavenumber(complex(k1, -k2)))
        assert {a.kind, b.kind} == {"decaying", "growing"}
        assert a.Gamma == pytest.approx(b.Gamma)
        assert a.E_R == pytest.approx(b.E_R)


class TestGamowVector:
    def test_small_r_power_law(self, spec_ref):
        # u(r)/r^{l+1} -> 1 at the origin
        for r in (1e-3, 1e-2):
            u = gs.gamow_vector(spec_ref, r)
            assert abs(u.value / r**2 - 1.0) < 0.05

    def test_a_zero_closed_form(self):
        # k = -1, l = 0: a = 2 and u collapses to r e^{-r} (the M(2,2,z)=e^z
        # identity folds the outgoing exponential back to decay)
        spec = gs.GamowSpec(ell=0, k=gs.ComplexWavenumber(complex(-1.0, 0.0)))
        u = gs.gamow_vector(spec, 1.0)
        assert abs(u.value - np.exp(-1.0)) < 1e-13
        assert abs(u.deriv - 0.0) < 1e-13  # d/dr r e^{-r} = (1-r) e^{-r} = 0 at r=1

    def test_frozen_reference_value(self, spec_ref):
        # mpmath-frozen closed-form value at r = 1
        u = gs.gamow_vector(spec_ref, 1.0)
        assert abs(u.value - (0.6072119535576874573 - 0.0070977448333903191j)) < 1e-12
        assert abs(u.deriv - (0.91220694098314134545 - 0.0257309392803016586j)) < 1e-12

    def test_matches_ode_oracle(self, spec_ref):
        v0, d0 = frobenius_seed(1, spec_ref.epsilon, 0.01)
        grid = gs.RadialGrid(points=np.array([1.0, 5.0, 10.0, 20.0]))
        orc = gs.integrate_radial(gs.RadialModel(ell=1), spec_ref.epsilon, (0.01, v0, d0), grid)
        for i, r in enumerate(grid.points):
            ref = gs.gamow_vector(spec_ref, float(r))
            assert abs(orc.values[i] - ref.value) / abs(ref.value) < 1e-6

    def test_xi_must_be_zero(self, kz_ref):
        spec = gs.GamowSpec(ell=1, k=kz_ref, xi=1.0)
        with pytest.raises(DomainError):
            gs.gamow_vector(spec, 1.0)

    def test_r_positive(self, spec_ref):
        with pytest.raises(DomainError):
            gs.gamow_vector(spec_ref, 0.0)

    def test_conjugation_symmetry(self, kz_ref):
        spec = gs.GamowSpec(ell=1, k=kz_ref)
        conj = gs.GamowSpec(ell=1, k=gs.ComplexWavenumber(kz_ref.k.conjugate()))
        for r in (0.3, 2.0, 11.0):
            a = gs.gamow_vector(spec, r).value
            b = gs.gamow_vector(conj, r).value
            assert abs(a.conjugate() - b) <= 1e-12 * abs(a)


class TestGeneralizedGamowVector:
    def test_xi_zero_reduces_to_ordinary(self, spec_ref, kz_ref):
        gen = gs.GamowSpec(ell=1, k=kz_ref, xi=0.0)
        for r in (0.5, 3.0, 15.0):
            a = gs.gamow_vector(spec_ref, r)
            b = gs.generalized_gamow_vector(gen, r)
            assert a.value == b.value and a.deriv == b.deriv

    def test_irregular_origin_behavior(self, spec_gen):
        # r^l w(r) approaches a nonzero constant when xi != 0, l >= 1
        vals = [complex(r * gs.generalized_gamow_vector(spec_gen, r).value)
                for r in (4e-3, 2e-3, 1e-3)]
        assert abs(vals[-1]) > 0.01
        assert abs(vals[-1] - vals[-2]) < 0.02 * abs(vals[-1])

    def test_frozen_reference_value(self, spec_gen):
        w = gs.generalized_gamow_vector(spec_gen, 1.0)
        assert abs(w.value - (-0.40217392257975674671 + 0.1831677356108933804j)) < 1e-11
        assert abs(w.deriv - (1.0725257133102548672 + 0.53463090669345707175j)) < 1e-11

    def test_evaluation_floor(self, spec_gen):
        with pytest.raises(DomainError):
            gs.generalized_gamow_vector(spec_gen, 5e-5)

    def test_ode_propagation_consistency(self, spec_gen):
        # seed the oracle from the closed form at r0 = 0.01 and propagate;
        # agreement over two decades confirms w solves the same equation.
        # Local tolerance is tightened because errors injected while the
        # r^{-l} component dominates get amplified by the regular-solution
        # growth ratio (~1e5 between 0.01 and 0.5).
        w0 = gs.generalized_gamow_vector(spec_gen, 0.01)
        grid = gs.RadialGrid(points=np.array([0.5, 1.0, 5.0, 10.0]))
        orc = gs.integrate_radial(
            gs.RadialModel(ell=1), spec_gen.epsilon, (0.01, w0.value, w0.deriv), grid,
            rtol=1e-12,
        )
        for i, r in enumerate(grid.points):
            ref = gs.generalized_gamow_vector(spec_gen, float(r))
            assert abs(orc.values[i] - ref.value) / abs(ref.value) < 1e-6

    def test_wronskian_with_ordinary_is_constant(self, spec_ref, spec_gen):
        # w - u = xi * (U-part) is an independent solution, so W(u, w) is an
        # r-independent nonzero constant (Abel, no first-derivative term)
        values = []
        for r in (0.5, 1.0, 2.0, 5.0, 10.0):
            u = gs.gamow_vector(spec_ref, r)
            w = gs.generalized_gamow_vector(spec_gen, r)
            values.append(u.value * w.deriv - u.deriv * w.value)
        ref = values[0]
        assert abs(ref) > 1e-6
        for v in values[1:]:
            assert abs(v - ref) <= 1e-9 * abs(ref)


class TestOutgoingResidual:
    def test_pure_exponential_case(self):
        # a = 0 form r^{l+1} e^{-kr}: residual is exactly (l+1)/r
        k = gs.ComplexWavenumber.real_positive(0.5)
        spec = gs.GamowSpec(ell=1, k=k)
        grid = gs.RadialGrid(points=np.linspace(20.0, 40.0, 100))
        u = gs.transformation_field(spec, grid)
        res = gs.outgoing_residual(u, k)
        assert res == pytest.approx(2.0 / 20.0, rel=1e-10)

    def test_reference_parameters_decay(self, spec_ref, kz_ref):
        grid = gs.RadialGrid(points=np.linspace(20.0, 40.0, 200))
        u = gs.transformation_field(spec_ref, grid)
        r20 = gs.outgoing_residual(u, kz_ref, tail_start=20.0)
        r40 = float(abs(u.deriv[-1] / u.values[-1] + kz_ref.k))
        assert r20 < 0.2
        assert r40 < r20  # O(1/r) falloff

    def test_wrong_sign_k_flagged(self):
        # a decaying field (u'/u -> -0.5) tested against the outgoing branch
        # claim k = -0.5: the residual saturates at 2|Re k| instead of falling
        dec = gs.GamowSpec(ell=1, k=gs.ComplexWavenumber.real_positive(0.5))
        grid = gs.RadialGrid(points=np.linspace(20.0, 40.0, 50))
        u = gs.transformation_field(dec, grid)
        res = gs.outgoing_residual(u, gs.ComplexWavenumber(complex(-0.5, 0.0)))
        assert res > 2.0 * 0.5 * 0.85

    def test_tail_requirement(self, spec_ref, kz_ref):
        grid = gs.RadialGrid(points=np.linspace(1.0, 10.0, 50))
        u = gs.transformation_field(spec_ref, grid)
        with pytest.raises(DomainError):
            gs.outgoing_residual(u, kz_ref)

    def test_vanishing_field_rejected(self, kz_ref):
        grid = gs.RadialGrid(points=np.linspace(20.0, 30.0, 20))
        z = np.zeros_like(grid.points, dtype=complex)
        z[0] = 1.0  # keep the max nonzero so the floor is meaningful
        f = gs.ComplexField(grid=grid, values=z, deriv=z)
        with pytest.raises(DegenerateInputError):
            gs.outgoing_residual(f, kz_ref)


class TestSchrodingerProperty:
    def test_both_families_solve_the_radial_equation(self, spec_ref, spec_gen):
        grid = gs.RadialGrid.make(0.05, 20.0, 3000)
        model = gs.RadialModel(ell=1)
        vf = lambda r: gs.effective_potential(model, r)  # noqa: E731
        for spec in (spec_ref, spec_gen):
            w = gs.transformation_field(spec, grid)
            res = gs.schrodinger_residual(w, vf, spec.epsilon)
            assert res <= 1e-5
