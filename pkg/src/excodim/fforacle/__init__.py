"""Finite-field verification kernel: field tables, dense multivariate
polynomials, Hilbert-function ranks, projective point counts, and the
codimension experiments built on them."""

from .fields import Field, gf
from .polynomials import MultiPoly, monomials, n_monomials, poly_from_line, poly_to_line
from .hilbert import GradedIdealPiece, hilbert_function, projective_dim_hilbert
from .points import PointProbe, projective_dim_points, projective_points
from .experiments import (
    DEFAULT_SEED,
    ExperimentResult,
    excess_experiment,
    poonen_combine,
    poonen_sample,
    restriction_codim,
    singular_experiment,
    singular_membership,
)

__all__ = [
    "Field",
    "gf",
    "MultiPoly",
    "monomials",
    "n_monomials",
    "poly_from_line",
    "poly_to_line",
    "GradedIdealPiece",
    "hilbert_function",
    "projective_dim_hilbert",
    "PointProbe",
    "projective_dim_points",
    "projective_points",
    "DEFAULT_SEED",
    "ExperimentResult",
    "excess_experiment",
    "poonen_combine",
    "poonen_sample",
    "restriction_codim",
    "singular_experiment",
    "singular_membership",
]
