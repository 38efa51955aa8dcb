"""Exact characteristic-class calculus for U(2)-representations and
decision procedures for vector bundle reductions over spin^c 6- and
7-manifolds, driven by finite cohomology models."""
from .charclass import CoeffProfile, ClassPolynomial, coeff_profile, euler_of, p1_of, q1_poly_of, table_rows
from .cohomodel import (
    BundleDescriptor,
    CohomologyModel,
    CupTable,
    LiftError,
    ModelError,
    SpincManifold,
    gauge,
    make_bundle,
    normal_w4,
    p1_of_bundle,
    q1_at,
    tangent_w4,
    validate_model,
    w4_of_bundle,
)
from .decide import (
    Decision,
    cor6_cases,
    exists_u2,
    exists_u3,
    g2_reduce,
    iso_6,
    iso_7,
    prop_7u3,
    reduce_so3_7,
    reduce_u2,
    reduce_u2_6,
    reduce_u2_7,
    sections_7,
    sp1_menu,
)
from .fga import FgaElement, FgaGroup, FgaHom, in_multiple, quotient_reps, smith, solve_hom
from .reps import RealForm, Realified, RealRep, canonicalize, complexified_weights, enumerate_reps, parse_rep

__version__ = "0.1.0"
