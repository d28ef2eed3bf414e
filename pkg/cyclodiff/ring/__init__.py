from .cycloint import (
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
from .params import (
    ADMISSIBLE_T,
    ADMISSIBLE_Z,
    NONZERO_PARAMS,
    PARAM_NAMES,
    RECORD_KEYS,
    ClassTuple,
    JacobiParams,
    admissible_generators,
    all_classes,
    class_of,
    extract_params,
    normalize_generator,
    param_record,
    params_from_record,
    validate_params,
)

__all__ = [
    "I",
    "I_SQRT2",
    "I_SQRT3",
    "I_SQRT6",
    "ONE",
    "SQRT3",
    "ZERO",
    "CycloInt",
    "SubBasis",
    "beta_power",
    "conjugate",
    "decompose",
    "jacobi_exponent_counts",
    "jacobi_sum",
    "mul",
    "ADMISSIBLE_T",
    "ADMISSIBLE_Z",
    "NONZERO_PARAMS",
    "PARAM_NAMES",
    "RECORD_KEYS",
    "ClassTuple",
    "JacobiParams",
    "admissible_generators",
    "all_classes",
    "class_of",
    "extract_params",
    "normalize_generator",
    "param_record",
    "params_from_record",
    "validate_params",
]
