import pytest

from cyclodiff.errors import InputError, InvariantViolation, NoAdmissibleGenerator, NotOneModN
from cyclodiff.ring import (
    PARAM_NAMES,
    RECORD_KEYS,
    ClassTuple,
    admissible_generators,
    all_classes,
    class_of,
    extract_params,
    normalize_generator,
    param_record,
    params_from_record,
    validate_params,
)


@pytest.fixture(scope="module")
def params73(ctx73):
    return extract_params(ctx73)


@pytest.fixture(scope="module")
def params97(ctx97):
    return extract_params(ctx97)


@pytest.mark.unit
class TestExtractParams:
    def test_values_at_73(self, params73):
        assert params73.X == -3 and abs(params73.Y) == 4
        assert params73.A == -5 and abs(params73.B) == 4
        assert params73.C == 1 and abs(params73.D) == 6
        assert params73.U == -7 and abs(params73.V) == 1

    def test_class_at_73(self, ctx73, params73):
        assert params73.klass == ClassTuple(1, 1, 4, 2)
        assert class_of(ctx73, params73) == params73.klass

    def test_values_at_97(self, params97):
        assert params97.X == 9 and abs(params97.Y) == 2
        assert params97.A == 7 and abs(params97.B) == 4
        assert params97.C == 5 and abs(params97.D) == 6
        assert params97.U == 1 and abs(params97.V) == 2
        assert params97.klass.F1 == 0
        assert params97.klass.V1 == 0

    def test_vector_order(self, params73):
        vec = params73.vector(73)
        assert vec[:2] == (73, 1)
        assert len(vec) == 18
        assert vec[2:] == params73.values()

    def test_validate_rejects_tampered_params(self, params73):
        from dataclasses import replace

        with pytest.raises(InvariantViolation, match="X ≡ 1"):
            validate_params(73, replace(params73, X=3))


@pytest.mark.unit
class TestNormalizeGenerator:
    def test_generator_is_admissible(self, ctx73):
        assert int(ctx73.ind[2]) % 12 in (0, 2, 4, 6)
        assert int(ctx73.ind[3]) % 8 in (0, 2, 4)
        assert ctx73.g == next(admissible_generators(ctx73))

    def test_pinned_generator_strict(self):
        # 5 is primitive modulo 73 but not admissible
        with pytest.raises(NoAdmissibleGenerator) as exc:
            normalize_generator(73, generator=5, exhaustive=False)
        assert exc.value.pinned == 5
        assert exc.value.exit_code == 3

    def test_pinned_generator_falls_back(self, ctx73):
        ctx = normalize_generator(73, generator=5)
        assert ctx.g == ctx73.g

    def test_not_one_mod_24(self):
        with pytest.raises(NotOneModN):
            normalize_generator(74)
        with pytest.raises(NotOneModN):
            normalize_generator(89)


@pytest.mark.unit
class TestClassTuple:
    @pytest.mark.parametrize("text", ["1,1,4,2", "1_1_4_2"])
    def test_parse(self, text):
        assert ClassTuple.parse(text) == ClassTuple(1, 1, 4, 2)

    @pytest.mark.parametrize("text", ["1,1,4", "1,1,5,0", "a,b,c,d", "2,0,0,0"])
    def test_parse_errors(self, text):
        with pytest.raises(InputError):
            ClassTuple.parse(text)

    def test_label_and_str(self):
        k = ClassTuple(0, 1, 6, 4)
        assert k.label == "0_1_6_4"
        assert str(k) == "(0,1,6,4)"
        assert ClassTuple.from_dict(k.as_dict()) == k

    def test_all_classes(self):
        classes = all_classes()
        assert len(classes) == 48
        assert len(set(classes)) == 48
        assert classes == sorted(classes)
        assert classes[0] == ClassTuple(0, 0, 0, 0)
        assert len(all_classes(F1=0)) == 24
        assert all(k.F1 == 1 for k in all_classes(F1=1))


@pytest.mark.unit
class TestParamRecord:
    def test_key_order(self, ctx73, params73):
        record = param_record(ctx73, params73)
        assert tuple(record) == RECORD_KEYS
        assert record["p"] == 73
        assert record["f"] == 3
        assert tuple(record[name] for name in PARAM_NAMES) == params73.values()

    def test_record_round_trip(self, ctx97, params97):
        assert params_from_record(param_record(ctx97, params97)) == params97

    def test_missing_keys(self, ctx73, params73):
        record = param_record(ctx73, params73)
        del record["D7"]
        with pytest.raises(InputError, match="D7"):
            params_from_record(record)
