import pytest

from cyclodiff.errors import NotInSpan
from cyclodiff.ring import (
    I,
    I_SQRT2,
    I_SQRT3,
    I_SQRT6,
    ONE,
    SQRT3,
    ZERO,
    CycloInt,
    SubBasis,
    beta_power,
    conjugate,
    decompose,
    jacobi_exponent_counts,
    jacobi_sum,
    mul,
)

# (u, v) of the five sums the parameters are read from
DEFINING_SUMS = [(6, 12), (4, 12), (3, 12), (1, 12), (1, 2)]


@pytest.mark.unit
class TestRing:
    def test_beta_powers(self):
        assert beta_power(0) == ONE
        assert beta_power(24) == ONE
        assert beta_power(12) == -ONE
        assert beta_power(8) == CycloInt((-1, 0, 0, 0, 1, 0, 0, 0))
        assert beta_power(-1) == beta_power(23)

    def test_mul_adds_exponents(self):
        for j in range(24):
            for k in range(24):
                assert mul(beta_power(j), beta_power(k)) == beta_power(j + k)

    def test_conjugate(self):
        assert conjugate(beta_power(1)) == beta_power(23)
        assert conjugate(I) == -I
        z = CycloInt((3, -1, 0, 2, 0, 0, 5, 1))
        assert conjugate(conjugate(z)) == z

    def test_quadratic_constants(self):
        assert I * I == CycloInt.from_int(-1)
        assert SQRT3 * SQRT3 == CycloInt.from_int(3)
        assert I_SQRT3 * I_SQRT3 == CycloInt.from_int(-3)
        assert I_SQRT2 * I_SQRT2 == CycloInt.from_int(-2)
        assert I_SQRT6 * I_SQRT6 == CycloInt.from_int(-6)

    def test_arithmetic_with_ints(self):
        z = beta_power(3)
        assert z + 0 == z
        assert 2 * z - z == z
        assert 1 - ONE == ZERO
        assert z**0 == ONE
        assert z**8 == beta_power(24)

    def test_galois(self):
        assert beta_power(1).galois(5) == beta_power(5)
        assert I.galois(7) == -I

    def test_from_coeffs_reduces(self):
        # β^8 = β^4 − 1
        assert CycloInt.from_coeffs([0] * 8 + [1]) == beta_power(8)

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            CycloInt((1, 2))


@pytest.mark.unit
class TestDecompose:
    @pytest.mark.parametrize("basis", list(SubBasis))
    def test_decompose_recovers(self, basis):
        z = 7 + (-3) * basis.element
        assert decompose(z, basis) == (7, -3)

    def test_not_in_span(self):
        with pytest.raises(NotInSpan):
            decompose(beta_power(1), SubBasis.I)
        with pytest.raises(NotInSpan):
            decompose(SQRT3, SubBasis.I_SQRT3)


@pytest.mark.unit
class TestJacobiSums:
    def test_exponent_counts_total(self, ctx73):
        counts = jacobi_exponent_counts(ctx73, 6, 12)
        assert counts.sum() == 73 - 2

    @pytest.mark.parametrize("u, v", DEFINING_SUMS)
    def test_norm_is_p(self, ctx73, ctx97, u, v):
        for ctx in (ctx73, ctx97):
            J = jacobi_sum(ctx, u, v)
            assert J * conjugate(J) == CycloInt.from_int(ctx.p)

    def test_trivial_character_sum(self, ctx73):
        # J(0, 0) counts x = 2..p−1
        assert jacobi_sum(ctx73, 0, 0) == CycloInt.from_int(71)
