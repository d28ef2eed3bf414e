from fractions import Fraction
from itertools import product

import pytest

from cyclodiff.errors import DimensionMismatch, UnknownVariable
from cyclodiff.linalg import (
    AffineSolution,
    Inconsistent,
    coord_affine,
    integer_obstruction,
    integer_solvable,
    modular_row_basis,
    rank,
    rref,
    solve_affine,
    solve_columns,
)


@pytest.mark.unit
class TestExact:
    def test_rref(self):
        R, pivots = rref([[1, 2], [2, 4]])
        assert pivots == (0,)
        assert R == [[1, 2], [0, 0]]
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([]) == 0

    def test_rref_fractions(self):
        R, pivots = rref([[2, 1], [0, 3]])
        assert pivots == (0, 1)
        assert R == [[1, 0], [0, 1]]
        assert rref([[3, 1]])[0] == [[1, Fraction(1, 3)]]

    def test_solve_affine_free_variable(self):
        sol = solve_affine([[1, 1]], [0], ["x", "y"])
        assert isinstance(sol, AffineSolution)
        assert sol.particular == (0, 0)
        assert sol.basis == ((-1, 1),)
        assert sol.free_variables == ("y",)
        assert sol.d == 1
        assert sol.evaluate([3]) == {"x": -3, "y": 3}

    def test_coordinates(self):
        sol = solve_affine([[2, 4]], [1], ["X", "Y"])
        x = coord_affine(sol, "X")
        assert x.constant == Fraction(1, 2)
        assert x.coeffs == (-2,)
        assert x.evaluate([1]) == Fraction(-3, 2)
        assert not x.is_constant
        assert str(x) == "1/2 + -2·a1"

    def test_inconsistent(self):
        result = solve_affine([[1, 1], [1, 1]], [0, 1], ["x", "y"])
        assert result == Inconsistent(rank=1, augmented_rank=2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_affine([[1, 1]], [0, 1], ["x", "y"])
        with pytest.raises(DimensionMismatch):
            solve_affine([[1, 1]], [0], ["x"])
        with pytest.raises(DimensionMismatch):
            rank([[1], [1, 2]])

    def test_unknown_variable(self):
        sol = solve_affine([[1, 1]], [0], ["x", "y"])
        with pytest.raises(UnknownVariable):
            sol.coordinate("z")

    def test_solve_columns(self):
        pivots, solutions, inconsistent = solve_columns([[1, 0], [0, 2]], [[1, 2], [4, 6]])
        assert pivots == (0, 1)
        assert solutions == [[1, 2], [2, 3]]
        assert inconsistent == []

    def test_solve_columns_inconsistent(self):
        _, solutions, inconsistent = solve_columns([[1], [1]], [[1, 1], [1, 2]])
        assert inconsistent == [1]
        assert solutions[0] == [1]


@pytest.mark.unit
class TestIntegerObstruction:
    def test_half(self):
        ob = integer_obstruction([[2]], [1])
        assert ob.combination == (1,)
        assert ob.value == Fraction(1, 2)

    def test_solvable(self):
        assert integer_obstruction([[2, 4]], [2]) is None
        assert integer_solvable([[1, 0], [0, 1]], [5, -7])
        assert integer_obstruction([], []) is None

    def test_combination(self):
        ob = integer_obstruction([[2, 4]], [1])
        assert ob.combination == (1, 2)
        assert ob.value == Fraction(1, 2)
        assert ob.describe(["X", "Y"]) == "X +2·Y = 1/2, which is not an integer"

    def test_rationally_inconsistent(self):
        ob = integer_obstruction([[1], [1]], [1, 2])
        assert ob.combination is None
        assert ob.describe(["X"]) == "no rational solution"

    def test_parity_clash(self):
        # 2X − A = 1 and 2Y − A = 0 force A both odd and even
        assert not integer_solvable([[2, 0, -1], [0, 2, -1]], [1, 0])

    def test_rational_rows(self):
        assert integer_solvable([[Fraction(1, 2), Fraction(1, 2)]], [Fraction(3, 2)])
        assert not integer_solvable([[Fraction(1, 3)]], [Fraction(1, 2)])

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            integer_obstruction([[1]], [1, 2])


@pytest.mark.unit
class TestModularRowBasis:
    def test_same_kernel(self):
        rows = [[2, 0], [0, 3], [2, 3]]
        basis = modular_row_basis(rows, 6)
        assert 1 <= len(basis) <= 2
        for v in product(range(6), repeat=2):
            by_rows = all(sum(a * x for a, x in zip(r, v)) % 6 == 0 for r in rows)
            by_basis = all(sum(a * x for a, x in zip(b, v)) % 6 == 0 for b in basis)
            assert by_rows == by_basis

    def test_reduced_away(self):
        assert modular_row_basis([[6, 12], [0, 0]], 6) == []
        assert modular_row_basis([], 576) == []

    def test_wide_rows(self):
        rows = [[1, 575, 4, 0], [1, 575, 4, 0], [0, 2, 0, 576 + 8]]
        basis = modular_row_basis(rows, 576)
        assert len(basis) == 2
        assert all(0 <= x < 576 for row in basis for x in row)
