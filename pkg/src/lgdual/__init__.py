"""Exact duality for quotient Landau-Ginzburg models with diagonal symmetry groups."""

from .duality import (
    CyReport,
    DualModel,
    WeightLattice,
    dual_as_model,
    dual_superpotential,
    dualize,
    is_calabi_yau,
    krawitz_dual,
    normalize_weight_generator,
    weight_lattice,
)
from .groups import (
    DiagonalGroup,
    KernelGroup,
    dual_lattice,
    elementary_divisors,
    enumerate_elements,
    group_equal,
    group_from_generators,
)
from .linalg import IntMatrix, adjugate, det, hnf_basis, integer_kernel, snf, solve_exact
from .model import (
    CharacterSum,
    ExponentMatrix,
    Factorization,
    QuotientLGModel,
    factorize,
    is_invariant,
    parse_polynomial,
    quotient_superpotential,
)
from .verify import (
    Certificate,
    verify_cy_corollary,
    verify_equal_sups,
    verify_involution,
    verify_krawitz_equivalence,
    verify_main,
)

__version__ = "0.1.0"
