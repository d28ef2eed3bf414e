"""
Exact rational linear algebra
Reduced row-echelon form, affine solution sets M·y = h, and one-pass solves
against many right-hand sides. No floating point anywhere.
"""

from __future__ import annotations

# Standard library imports
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Sequence

# Local imports
from ..errors import DimensionMismatch, UnknownVariable

Rational = Fraction
Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def _shape(M: Sequence[Sequence]) -> tuple[int, int]:
    n_rows = len(M)
    n_cols = len(M[0]) if n_rows else 0
    if any(len(row) != n_cols for row in M):
        raise DimensionMismatch("ragged matrix")
    return n_rows, n_cols


def rref(M: Sequence[Sequence], n_pivot_cols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns.

    Pivots are searched only among the first n_pivot_cols columns (all by
    default); the remaining columns ride along as augmented right-hand sides.
    """
    R = to_matrix(M)
    n_rows, n_cols = _shape(R)
    limit = n_cols if n_pivot_cols is None else n_pivot_cols
    pivots = []
    piv_r = 0
    for piv_c in range(limit):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if R[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            R[piv_r], R[i_row] = R[i_row], R[piv_r]
        fp = R[piv_r][piv_c]
        if fp != 1:
            R[piv_r] = [x / fp for x in R[piv_r]]
        pivot_row = R[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = R[r][piv_c]
            if fr == 0:
                continue
            R[r] = [a - fr * b for a, b in zip(R[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
    return R, tuple(pivots)


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


@dataclass(frozen=True)
class AffineForm:
    """constant + Σ coeffs[k]·a_k over the free parameters"""

    constant: Fraction
    coeffs: tuple[Fraction, ...]

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, params: Sequence) -> Fraction:
        if len(params) != len(self.coeffs):
            raise DimensionMismatch(f"{len(params)} parameter values for {len(self.coeffs)} parameters")
        return self.constant + sum((c * Fraction(a) for c, a in zip(self.coeffs, params)), Fraction(0))

    def __str__(self):
        parts = [str(self.constant)] if self.constant or self.is_constant else []
        for k, c in enumerate(self.coeffs, start=1):
            if c:
                parts.append(f"{c}·a{k}")
        return " + ".join(parts)


@dataclass(frozen=True)
class AffineSolution:
    """particular + span(basis); free_variables names the non-pivot variables
    the basis is built on, when the solution came from solve_affine"""

    variables: tuple[str, ...]
    particular: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]
    free_variables: tuple[str, ...] | None = None

    @property
    def d(self) -> int:
        return len(self.basis)

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise UnknownVariable(var)

    def coordinate(self, var: str) -> AffineForm:
        i = self.index(var)
        return AffineForm(self.particular[i], tuple(vec[i] for vec in self.basis))

    def direction_scale(self, k: int = 0) -> int:
        """Least L > 0 with L·basis[k] integral; a free parameter t reads t/L along that vector"""
        return lcm(*(Fraction(x).denominator for x in self.basis[k]))

    def evaluate(self, params: Sequence) -> Dict[str, Fraction]:
        if len(params) != self.d:
            raise DimensionMismatch(f"{len(params)} parameter values for d={self.d}")
        values = list(self.particular)
        for a, vec in zip(params, self.basis):
            a = Fraction(a)
            values = [v + a * b for v, b in zip(values, vec)]
        return dict(zip(self.variables, values))


@dataclass(frozen=True)
class Inconsistent:
    """rank(M) < rank([M|h]): no rational solution"""

    rank: int
    augmented_rank: int


def solve_affine(M: Sequence[Sequence], h: Sequence, names: Sequence[str]) -> AffineSolution | Inconsistent:
    n_rows, n_cols = _shape(M)
    if len(h) != n_rows:
        raise DimensionMismatch(f"M has {n_rows} rows but h has {len(h)} entries")
    if len(names) != n_cols:
        raise DimensionMismatch(f"M has {n_cols} columns but {len(names)} variable names were given")

    augmented = [list(row) + [h_i] for row, h_i in zip(M, h)]
    R, pivots = rref(augmented, n_pivot_cols=n_cols)
    r = len(pivots)
    if any(R[i][n_cols] != 0 for i in range(r, n_rows)):
        return Inconsistent(rank=r, augmented_rank=r + 1)

    particular = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        particular[c] = R[i][n_cols]

    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -R[i][free]
        basis.append(tuple(vec))

    return AffineSolution(
        variables=tuple(names),
        particular=tuple(particular),
        basis=tuple(basis),
        free_variables=tuple(names[c] for c in free_cols),
    )


def coord_affine(sol: AffineSolution, var: str) -> AffineForm:
    return sol.coordinate(var)


def solve_columns(M: Sequence[Sequence], H: Sequence[Sequence]) -> tuple[tuple[int, ...], list[list[Fraction]], list[int]]:
    """Solve M·x = H[:, j] for every column j of H in one elimination.

    Returns (pivots, solutions, inconsistent) where solutions[j] is the
    canonical solution of column j (free unknowns set to zero) and
    inconsistent lists the columns with no solution.
    """
    n_rows, n_cols = _shape(M)
    h_rows, n_rhs = _shape(H)
    if h_rows != n_rows:
        raise DimensionMismatch(f"M has {n_rows} rows but H has {h_rows}")

    augmented = [list(m_row) + list(h_row) for m_row, h_row in zip(M, H)]
    R, pivots = rref(augmented, n_pivot_cols=n_cols)
    r = len(pivots)

    inconsistent = [
        j for j in range(n_rhs) if any(R[i][n_cols + j] != 0 for i in range(r, n_rows))
    ]
    solutions = []
    for j in range(n_rhs):
        x = [Fraction(0)] * n_cols
        for i, c in enumerate(pivots):
            x[c] = R[i][n_cols + j]
        solutions.append(x)
    return pivots, solutions, inconsistent
