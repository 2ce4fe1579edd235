"""Closed counting formulas, their alpha numbers and series identities."""

from counts.alpha import (
    alpha,
    alpha_from_u0,
    alpha_special,
    h_series,
    u0_series,
    u_count,
)
from counts.enumeration import (
    angulation_count,
    angulation_formula,
    angulation_series,
    beta_count,
    beta_series,
    essential_count,
    f_count,
    n_count,
    n_count_symbolic,
    n_essential,
)
from counts.formulas import fixed_cycle_count, p_univ, q_univ, r_poly, two_face_count
from counts.transforms import (
    budd_identity_residual,
    n_count_via_integral,
    pk_from_qk_matrix,
    qk_from_pk_matrix,
    transforms_compose_to_identity,
)
from counts.types import AlphaMethod, FaceSpec

__all__ = [
    "AlphaMethod",
    "FaceSpec",
    "alpha",
    "alpha_from_u0",
    "alpha_special",
    "angulation_count",
    "angulation_formula",
    "angulation_series",
    "beta_count",
    "beta_series",
    "budd_identity_residual",
    "essential_count",
    "f_count",
    "fixed_cycle_count",
    "h_series",
    "n_count",
    "n_count_symbolic",
    "n_count_via_integral",
    "n_essential",
    "p_univ",
    "pk_from_qk_matrix",
    "q_univ",
    "qk_from_pk_matrix",
    "r_poly",
    "transforms_compose_to_identity",
    "two_face_count",
    "u0_series",
    "u_count",
]
