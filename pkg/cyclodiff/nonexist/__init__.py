from .analysis import (
    ContradictionReport,
    PartitionOutcome,
    Verdict,
    VerdictKind,
    Witness,
    analyze_class,
    analyze_tables,
    auxiliary_relation_check,
    forced_value_check,
    partition_contradiction,
    pointwise_soundness,
    table_congruences,
    verdict_totals,
)
from .systems import SYSTEM_ROWS, Mode, SystemSpec, VariableSet, build_system, default_variable_set, row_windows
from .verify import (
    DSReport,
    ScanResult,
    cross_check_generators,
    direct_criterion_scan,
    power_residues,
    scan_prime,
    verify_addition_set,
)

__all__ = [
    "ContradictionReport",
    "PartitionOutcome",
    "Verdict",
    "VerdictKind",
    "Witness",
    "analyze_class",
    "analyze_tables",
    "auxiliary_relation_check",
    "forced_value_check",
    "partition_contradiction",
    "pointwise_soundness",
    "table_congruences",
    "verdict_totals",
    "SYSTEM_ROWS",
    "Mode",
    "SystemSpec",
    "VariableSet",
    "build_system",
    "default_variable_set",
    "row_windows",
    "DSReport",
    "cross_check_generators",
    "ScanResult",
    "direct_criterion_scan",
    "power_residues",
    "scan_prime",
    "verify_addition_set",
]
