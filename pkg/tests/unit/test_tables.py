import numpy as np
import pytest

from cyclodiff.cyclotomy import (
    COEFF_ORDER,
    CoeffTable,
    CycCoeffRow,
    check_table,
    derive_table,
    eval_row,
    load_table,
    project_short6,
    project_short8,
    save_table,
)
from cyclodiff.cyclotomy.harvest import Observation
from cyclodiff.errors import (
    ClassMismatch,
    InputError,
    NonIntegralCoefficient,
    NonZeroOmitted,
    RankDeficient,
    ValidationFailure,
)
from cyclodiff.ring import ClassTuple, JacobiParams

KLASS = ClassTuple(1, 1, 4, 2)

# row (6,0) of class (1,1,4,0)
ANCHOR = (1, -23, 4, 0, -14, 24, -8, 0, -8, 0, 32, 0, 0, 0, 16, 0, 0, 0)


def _params(values, klass=KLASS) -> JacobiParams:
    X, Y, A, B, C, D, U, V = (int(v) for v in values[:8])
    return JacobiParams(X=X, Y=Y, A=A, B=B, C=C, D=D, U=U, V=V, Dj=tuple(int(v) for v in values[8:]), klass=klass)


def synthetic_observations(coeffs, count, seed=0, klass=KLASS, tweak=None):
    """Observations whose counts follow the coefficient matrix exactly"""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        values = rng.integers(-40, 41, size=16)
        if tweak is not None:
            tweak(values)
        params = _params(values, klass)
        p = 1000 + 48 * i + 25
        scaled = (coeffs @ np.array(params.vector(p), dtype=np.int64)).reshape(24, 24)
        out.append(Observation(p=p, g=5, params=params, scaled=scaled))
    return out


@pytest.fixture(scope="module")
def true_coeffs():
    rng = np.random.default_rng(0)
    return rng.integers(-30, 31, size=(576, 18)).astype(np.int64)


@pytest.fixture(scope="module")
def derived(true_coeffs):
    return derive_table(KLASS, synthetic_observations(true_coeffs, 25), held_out=5)


@pytest.mark.unit
class TestDeriveTable:
    def test_recovers_coefficients(self, derived, true_coeffs):
        assert np.array_equal(derived.coefficient_matrix(), true_coeffs)
        assert derived.row(3, 4).coeffs == tuple(int(c) for c in true_coeffs[3 * 24 + 4])

    def test_provenance(self, derived):
        assert len(derived.provenance) == 20
        assert len(derived.validated) == 5
        assert not set(derived.provenance) & set(derived.validated)
        assert derived.warnings == ()

    def test_rank_deficient(self, true_coeffs):
        with pytest.raises(RankDeficient) as exc:
            derive_table(KLASS, synthetic_observations(true_coeffs, 10), held_out=0)
        assert exc.value.rank == 10
        assert exc.value.exit_code == 2

    def test_class_mismatch(self, true_coeffs):
        obs = synthetic_observations(true_coeffs, 24)
        obs += synthetic_observations(true_coeffs, 1, seed=1, klass=ClassTuple(1, 0, 4, 2))
        with pytest.raises(ClassMismatch):
            derive_table(KLASS, obs)

    def test_held_out_prime_disagrees(self, true_coeffs):
        obs = synthetic_observations(true_coeffs, 25)
        bad = obs[-1]
        scaled = bad.scaled.copy()
        scaled[3, 4] += 1
        obs[-1] = Observation(p=bad.p, g=bad.g, params=bad.params, scaled=scaled)
        with pytest.raises(ValidationFailure) as exc:
            derive_table(KLASS, obs, held_out=5)
        assert (exc.value.p, exc.value.s, exc.value.t) == (bad.p, 3, 4)

    def test_non_integral_coefficient(self, true_coeffs):
        def even_x(values):
            values[0] = 2 * values[0]

        obs = synthetic_observations(true_coeffs, 25, tweak=even_x)
        for o in obs:
            o.scaled[0, 0] = o.params.X // 2
        with pytest.raises(NonIntegralCoefficient) as exc:
            derive_table(KLASS, obs)
        assert (exc.value.s, exc.value.t) == (0, 0)

    def test_dependency_policy(self, true_coeffs):
        def no_d7(values):
            values[15] = 0

        obs = synthetic_observations(true_coeffs, 41, tweak=no_d7)
        with pytest.raises(RankDeficient):
            derive_table(KLASS, obs)
        table = derive_table(KLASS, obs, allow_dependency=True)
        assert len(table.warnings) == 1
        assert "D7" in table.warnings[0]
        assert all(r.coefficient("D7") == 0 for r in table.rows)
        expected = true_coeffs.copy()
        expected[:, 17] = 0
        assert np.array_equal(table.coefficient_matrix(), expected)

    def test_check_table_on_fresh_primes(self, derived, true_coeffs):
        check_table(derived, synthetic_observations(true_coeffs, 5, seed=7))


@pytest.mark.unit
class TestCoeffTable:
    def test_dict_round_trip(self, derived):
        restored = CoeffTable.from_dict(derived.to_dict())
        assert restored == derived
        assert list(derived.to_dict()) == ["class", "order", "rows", "provenance", "validated"]

    def test_wrong_coefficient_order(self, derived):
        data = derived.to_dict()
        data["order"] = list(reversed(data["order"]))
        with pytest.raises(InputError):
            CoeffTable.from_dict(data)

    def test_save_and_load(self, derived, tmp_path):
        path = tmp_path / "1_1_4_2.json"
        save_table(derived, str(path))
        assert load_table(str(path)) == derived

    def test_csv(self, derived):
        lines = derived.to_csv().splitlines()
        assert lines[0] == "s,t," + ",".join(COEFF_ORDER)
        assert len(lines) == 577
        assert lines[1].startswith("0,0,")

    def test_needs_every_row(self, derived):
        with pytest.raises(InputError):
            CoeffTable(klass=KLASS, rows=derived.rows[:-1])

    def test_evaluate_and_eval_row(self, derived, true_coeffs):
        obs = synthetic_observations(true_coeffs, 1, seed=3)[0]
        assert np.array_equal(derived.evaluate(obs.p, obs.params), obs.scaled)
        assert eval_row(derived.row(5, 17), obs.p, obs.params) == obs.scaled[5, 17]

    def test_evaluate_wrong_class(self, derived, true_coeffs):
        obs = synthetic_observations(true_coeffs, 1, klass=ClassTuple(0, 0, 0, 0))[0]
        with pytest.raises(ClassMismatch):
            derived.evaluate(obs.p, obs.params)
        with pytest.raises(ClassMismatch):
            eval_row(derived.row(0, 0), obs.p, obs.params)


@pytest.mark.unit
class TestProjections:
    def test_anchor_row(self):
        row = CycCoeffRow(6, 0, ANCHOR)
        assert row.coefficient("p") == 1
        assert row.coefficient("1") == -23
        assert project_short6(row) == (4, 0, -14, 24, -8, -8, 32, 0, 16, 0)
        assert project_short8(row) == (4, 0, -14, 24, -8, -8, 32, 16)
        assert row.cycfull()[:4] == (6, 0, 1, -23)

    def test_nonzero_omitted(self):
        coeffs = list(ANCHOR)
        coeffs[COEFF_ORDER.index("D2")] = 1
        row = CycCoeffRow(0, 0, tuple(coeffs))
        assert project_short6(row)[7] == 1
        with pytest.raises(NonZeroOmitted) as exc:
            project_short8(row)
        assert exc.value.names == ("D2",)

        coeffs[COEFF_ORDER.index("V")] = 2
        with pytest.raises(NonZeroOmitted):
            project_short6(CycCoeffRow(0, 0, tuple(coeffs)))

    def test_row_length(self):
        with pytest.raises(InputError):
            CycCoeffRow(0, 0, (1, 2, 3))
