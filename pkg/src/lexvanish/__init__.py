"""Vanishing ideals of points with multiplicity structures under lex order."""

from .errors import (
    DimensionError,
    InvariantError,
    LexVanishError,
    PreconditionError,
    ValidationError,
)
from .intersection import ReducedBasis, gp, intersect, p0, quotient_basis
from .lowerset import LowerSet, add_lower_sets, embed, glt, is_lower_set, proj, proj_hat
from .poly import Functional, Polynomial, apply_functional, lc_n, leading_term, lex_compare, normal_form
from .unipoly import UniPoly, eea
from .vanishing import Instance, PointWithStructure, SolvedIdeal, solve

__version__ = "0.1.0"
