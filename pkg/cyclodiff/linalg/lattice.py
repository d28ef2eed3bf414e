"""
Integer solvability of rational linear systems
Column reduction by unimodular transforms: M·U = H lower echelon, z = U⁻¹·y.
When M·y = h has no integer solution, the first non-integral z_c names an
integer combination of the variables that the system forces off the integers.
"""

from __future__ import annotations

# Standard library imports
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

# Third-party imports
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

# Local imports
from ..errors import DimensionMismatch


@dataclass(frozen=True)
class IntegerObstruction:
    """Σ combination[j]·y_j is an integer for integer y, yet the system forces it to value.

    combination is None when the system has no rational solution either.
    """

    combination: Optional[tuple[int, ...]]
    value: Optional[Fraction]

    def describe(self, names: Sequence[str]) -> str:
        if self.combination is None:
            return "no rational solution"
        terms = []
        for c, name in zip(self.combination, names):
            if c == 1:
                terms.append(f"+{name}")
            elif c == -1:
                terms.append(f"-{name}")
            elif c:
                terms.append(f"{c:+d}·{name}")
        lhs = " ".join(terms).lstrip("+") or "0"
        return f"{lhs} = {self.value}, which is not an integer"


def _integer_rows(M: Sequence[Sequence], h: Sequence) -> tuple[list[list[int]], list[Fraction]]:
    rows, rhs = [], []
    for row, h_i in zip(M, h):
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * scale) for x in fr])
        rhs.append(Fraction(h_i) * scale)
    return rows, rhs


def integer_obstruction(M: Sequence[Sequence], h: Sequence) -> Optional[IntegerObstruction]:
    """None when M·y = h has an integer solution y, otherwise the obstruction"""
    if len(M) != len(h):
        raise DimensionMismatch(f"M has {len(M)} rows but h has {len(h)} entries")
    if not M:
        return None
    A, b = _integer_rows(M, h)
    n_rows, k = len(A), len(A[0])
    V = [[int(i == j) for j in range(k)] for i in range(k)]

    pivot_of_row = {}
    col = 0
    for i in range(n_rows):
        if col == k:
            break
        for j in range(col + 1, k):
            bj = A[i][j]
            if bj == 0:
                continue
            a = A[i][col]
            x, y, g = (int(v) for v in igcdex(a, bj))
            ag, bg = a // g, bj // g
            for row in A:
                c_val, j_val = row[col], row[j]
                row[col] = x * c_val + y * j_val
                row[j] = -bg * c_val + ag * j_val
            v_col, v_j = V[col], V[j]
            V[col] = [ag * u + bg * w for u, w in zip(v_col, v_j)]
            V[j] = [-y * u + x * w for u, w in zip(v_col, v_j)]
        if A[i][col] != 0:
            pivot_of_row[i] = col
            col += 1

    z: list[Fraction] = []
    for i in range(n_rows):
        partial = sum((A[i][c] * z[c] for c in range(len(z))), Fraction(0))
        c = pivot_of_row.get(i)
        if c is None:
            if partial != b[i]:
                return IntegerObstruction(combination=None, value=None)
            continue
        z_c = (b[i] - partial) / A[i][c]
        if z_c.denominator != 1:
            return IntegerObstruction(combination=tuple(V[c]), value=z_c)
        z.append(z_c)
    return None


def integer_solvable(M: Sequence[Sequence], h: Sequence) -> bool:
    return integer_obstruction(M, h) is None


def modular_row_basis(rows: Sequence[Sequence[int]], modulus: int) -> list[list[int]]:
    """At most n_cols integer rows b with: b·v ≡ 0 (mod modulus) for all b
    exactly when r·v ≡ 0 (mod modulus) for every input row r and integer v.

    Integer row echelon by unimodular pair operations, entries kept reduced.
    """
    A = sorted({tuple(int(x) % modulus for x in row) for row in rows})
    A = [list(row) for row in A if any(row)]
    if not A:
        return []
    n_cols = len(A[0])
    r = 0
    for c in range(n_cols):
        if r == len(A):
            break
        have_pivot = False
        for i in range(r, len(A)):
            if A[i][c] == 0:
                continue
            if not have_pivot:
                A[r], A[i] = A[i], A[r]
                have_pivot = True
                continue
            a, b = A[r][c], A[i][c]
            x, y, g = igcdex(a, b)
            top, other = A[r], A[i]
            A[r] = [(x * u + y * v) % modulus for u, v in zip(top, other)]
            A[i] = [((a // g) * v - (b // g) * u) % modulus for u, v in zip(top, other)]
        if have_pivot:
            r += 1
    return [row for row in A[:r] if any(row)]
