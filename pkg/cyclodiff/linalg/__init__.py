from .exact import (
    AffineForm,
    AffineSolution,
    Inconsistent,
    Rational,
    coord_affine,
    rank,
    rref,
    solve_affine,
    solve_columns,
    to_matrix,
)
from .lattice import IntegerObstruction, integer_obstruction, integer_solvable, modular_row_basis

__all__ = [
    "AffineForm",
    "AffineSolution",
    "Inconsistent",
    "Rational",
    "coord_affine",
    "rank",
    "rref",
    "solve_affine",
    "solve_columns",
    "to_matrix",
    "IntegerObstruction",
    "integer_obstruction",
    "integer_solvable",
    "modular_row_basis",
]
