"""Partial-dual Euler-genus polynomials of one-vertex ribbon graphs."""

from .families import (
    FamilyKind,
    RibbonClassification,
    classify_ribbons,
    closed_form_B,
    closed_form_C,
    family_rotation,
    lemma_epsilon_B,
    lemma_epsilon_C,
)
from .polynomial import (
    GenusPolynomial,
    SubsetGenusTable,
    gap_exponents,
    is_interpolating,
    parse_polynomial,
    partial_dual_euler_genus,
    partial_dual_euler_polynomial,
    partial_dual_orientable_polynomial,
    subset_table,
)
from .rotation import (
    HalfEdge,
    RotationError,
    SignedRotation,
    boundary_components,
    canonical_form,
    euler_genus,
    format_rotation,
    induced_sub_rotation,
    interlaced,
    is_orientable,
    is_prime,
    parse_rotation,
)
from .search import (
    CounterexampleRecord,
    SearchConfig,
    enumerate_canonical,
    find_counterexamples,
    verify_known_counterexamples,
)

__version__ = "0.1.0"
