"""Non-Hermitian SUSY partners of the radial Coulomb problem.

Gamow-type solutions (complex eigenvalue, purely outgoing) serve as
transformation functions of a first-order factorization of the radial
Schrodinger operator.  The package evaluates the required confluent
hypergeometric functions for complex parameters, builds the superpotential
and complex partner potential, maps the hydrogen bound states onto the
partner's eigenstates, and verifies every spectral and asymptotic property
numerically.
"""

from ._backend import NUMBA_ENABLED, backend_name
from .darboux import (
    PartnerPotential,
    Superpotential,
    TransformedState,
    apply_b,
    darboux_map,
    extra_eigenstate,
    normalize,
    partner_potential,
    superpotential,
    transform_bound_state,
)
from .gamow import (
    ComplexWavenumber,
    EnergyClass,
    GamowSpec,
    classify_energy,
    gamow_vector,
    generalized_gamow_vector,
    outgoing_residual,
    transformation_field,
    wavenumber_from_energy,
)
from .numerics import (
    ComplexField,
    QuadResult,
    RadialGrid,
    inner_product,
    integrate_radial,
    norm_squared,
    quadrature,
    schrodinger_residual,
)
from .potentials import (
    BoundState,
    RadialModel,
    effective_potential,
    hydrogen_bound_state,
)
from .specfun import HypParams, ValueDeriv, kummer_m, tricomi_u

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "backend_name",
    "HypParams",
    "ValueDeriv",
    "kummer_m",
    "tricomi_u",
    "RadialModel",
    "BoundState",
    "effective_potential",
    "hydrogen_bound_state",
    "ComplexWavenumber",
    "GamowSpec",
    "EnergyClass",
    "wavenumber_from_energy",
    "classify_energy",
    "gamow_vector",
    "generalized_gamow_vector",
    "transformation_field",
    "outgoing_residual",
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
    "RadialGrid",
    "ComplexField",
    "QuadResult",
    "integrate_radial",
    "schrodinger_residual",
    "quadrature",
    "norm_squared",
    "inner_product",
    "__version__",
]
