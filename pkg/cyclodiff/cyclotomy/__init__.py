from .counting import CycMatrix, count_all, cyclotomic_from_jacobi, naive_count
from .harvest import (
    FIRST_PRIME,
    CensusEntry,
    Observation,
    class_census,
    harvest,
    observe,
    observe_many,
    primes_one_mod_24,
)
from .tables import (
    COEFF_ORDER,
    SHORT6_NAMES,
    SHORT8_NAMES,
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

__all__ = [
    "CycMatrix",
    "count_all",
    "cyclotomic_from_jacobi",
    "naive_count",
    "FIRST_PRIME",
    "CensusEntry",
    "Observation",
    "class_census",
    "harvest",
    "observe",
    "observe_many",
    "primes_one_mod_24",
    "COEFF_ORDER",
    "SHORT6_NAMES",
    "SHORT8_NAMES",
    "CoeffTable",
    "CycCoeffRow",
    "check_table",
    "derive_table",
    "eval_row",
    "load_table",
    "project_short6",
    "project_short8",
    "save_table",
]
