"""Shared fixtures: the reference parameter set and heavyweight reports."""

from __future__ import annotations

import numpy as np
import pytest

import gamowsusy as gs
from gamowsusy.verify import run_verification

# reference complex energy (and the wavenumber it factors through)
EPS_REF = complex(-0.2604, 0.104)
K_REF = complex(-0.52, 0.1)


@pytest.fixture(scope="session")
def kz_ref():
    return gs.wavenumber_from_energy(EPS_REF)


@pytest.fixture(scope="session")
def spec_ref(kz_ref):
    return gs.GamowSpec(ell=1, k=kz_ref)


@pytest.fixture(scope="session")
def spec_gen(kz_ref):
    return gs.GamowSpec(ell=1, k=kz_ref, xi=1.0)


@pytest.fixture(scope="session")
def default_grid():
    return gs.RadialGrid.make(1e-3, 40.0, 4000)


@pytest.fixture(scope="session")
def wide_grid():
    # wide enough to hold the n = 5 hydrogen state
    return gs.RadialGrid.make(1e-3, 90.0, 6000)


@pytest.fixture(scope="session")
def report_gamow():
    return run_verification(1, EPS_REF, 0.0)


@pytest.fixture(scope="session")
def report_generalized():
    return run_verification(1, EPS_REF, 1.0)


@pytest.fixture(scope="session")
def report_hermitian():
    return run_verification(1, complex(-0.25, 0.0), 0.0, hermitian_k=0.5)


def frobenius_seed(ell: int, eps: complex, r0: float, nterms: int = 14):
    """Series of the regular solution from the ODE's own recursion.

    Independent of the hypergeometric evaluators: the indicial recursion
    j (j + 2l + 1) a_j = -2 a_{j-1} - eps a_{j-2} follows directly from the
    radial equation with the Coulomb coupling.
    """
    coef = [1.0 + 0.0j]
    for j in range(1, nterms):
        prev2 = coef[j - 2] if j >= 2 else 0.0j
        coef.append((-2.0 * coef[j - 1] - eps * prev2) / (j * (j + 2 * ell + 1)))
    val = sum(a * r0 ** (ell + 1 + j) for j, a in enumerate(coef))
    der = sum(a * (ell + 1 + j) * r0 ** (ell + j) for j, a in enumerate(coef))
    return val, der


def coulomb_vfun(ell: int):
    model = gs.RadialModel(ell=ell)
    return lambda r: gs.effective_potential(model, r)
