"""
Linear systems for the nonexistence arguments
A difference set (f odd) forces 576·C₂₄(s,0) = p − 25 + 48ε and a qualified
difference set (f even) forces 576·C₂₄(s,12) = p − 1 + 48ε for s = 1..11.
Substituting a coefficient table turns these into M·y = h with h = −2 + 48ε.
"""

from __future__ import annotations

# Standard library imports
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence

# Local imports
from ..cyclotomy.tables import CoeffTable, SHORT6_NAMES, SHORT8_NAMES, project_short6, project_short8
from ..errors import ClassMismatch, InputError, NonZeroOmitted, StructureViolation
from ..ring.params import PARAM_NAMES, ClassTuple

logger = logging.getLogger(__name__)

SYSTEM_ROWS = tuple(range(1, 12))


class Mode(Enum):
    """Which set is ruled out; value is the CLI spelling"""

    DIFFERENCE = "difference"
    QUALIFIED = "qualified"

    @property
    def column(self) -> int:
        return 0 if self is Mode.DIFFERENCE else 12

    @property
    def constant(self) -> int:
        """Constant coefficient every system row must carry"""
        return -23 if self is Mode.DIFFERENCE else 1

    @property
    def parity(self) -> int:
        """Required F1: f odd for difference sets, f even for qualified ones"""
        return 1 if self is Mode.DIFFERENCE else 0

    def rhs(self, epsilon: int) -> int:
        return -2 + 48 * epsilon

    def criterion_offset(self, epsilon: int) -> int:
        """576·C₂₄(s, column) − p demanded by the set's existence"""
        return self.constant + self.rhs(epsilon)


class VariableSet(Enum):
    SHORT6 = SHORT6_NAMES
    SHORT8 = SHORT8_NAMES
    FULL16 = PARAM_NAMES

    @property
    def names(self) -> tuple[str, ...]:
        return self.value


def default_variable_set(mode: Mode, klass: ClassTuple) -> VariableSet:
    """Short8 where d₈ and d₁₀ vanish identically, Short6 otherwise"""
    if (mode is Mode.QUALIFIED and klass.T == 4) or (mode is Mode.DIFFERENCE and klass.T == 0):
        return VariableSet.SHORT8
    return VariableSet.SHORT6


def _check_epsilon(epsilon: int):
    if epsilon not in (0, 1):
        raise InputError(f"epsilon must be 0 or 1, got {epsilon}")


@dataclass(frozen=True)
class SystemSpec:
    mode: Mode
    epsilon: int
    klass: ClassTuple
    variables: tuple[str, ...]
    M: tuple[tuple[int, ...], ...]
    h: tuple[int, ...]
    rows_used: tuple[int, ...] = SYSTEM_ROWS

    @property
    def variable_set(self) -> Optional[VariableSet]:
        for vs in VariableSet:
            if vs.names == self.variables:
                return vs
        return None

    def restrict(self, rows: Sequence[int]) -> SystemSpec:
        """Subsystem on the given s values, in that order"""
        picked = []
        for s in rows:
            if s not in self.rows_used:
                raise InputError(f"Row s={s} is not part of this system")
            picked.append(self.rows_used.index(s))
        return SystemSpec(
            mode=self.mode,
            epsilon=self.epsilon,
            klass=self.klass,
            variables=self.variables,
            M=tuple(self.M[i] for i in picked),
            h=tuple(self.h[i] for i in picked),
            rows_used=tuple(rows),
        )

    def to_dict(self) -> Dict:
        return {
            "class": self.klass.as_dict(),
            "mode": self.mode.value,
            "epsilon": self.epsilon,
            "variables": list(self.variables),
            "M": [list(row) for row in self.M],
            "h": list(self.h),
            "rows_used": list(self.rows_used),
        }


def build_system(
    table: CoeffTable,
    mode: Mode,
    epsilon: int,
    variable_set: Optional[VariableSet] = None,
) -> SystemSpec:
    _check_epsilon(epsilon)
    klass = table.klass
    if klass.F1 != mode.parity:
        raise ClassMismatch(f"F1={mode.parity} for {mode.value} mode", klass)
    variable_set = variable_set or default_variable_set(mode, klass)

    M = []
    for s in SYSTEM_ROWS:
        row = table.row(s, mode.column)
        p_coeff, constant = row.coeffs[0], row.coeffs[1]
        if p_coeff != 1 or constant != mode.constant:
            logger.error(f"Table {klass} row ({s},{mode.column}) starts {row.coeffs[:2]}")
            raise StructureViolation(
                f"row ({s},{mode.column}) of class {klass} has p-coefficient {p_coeff} "
                f"and constant {constant}; expected 1 and {mode.constant}"
            )
        try:
            if variable_set is VariableSet.SHORT8:
                coeffs = project_short8(row)
            elif variable_set is VariableSet.SHORT6:
                coeffs = project_short6(row)
            else:
                coeffs = tuple(row.coeffs[2:])
        except NonZeroOmitted as exc:
            raise StructureViolation(str(exc)) from exc
        M.append(tuple(coeffs))

    rhs = mode.rhs(epsilon)
    return SystemSpec(
        mode=mode,
        epsilon=epsilon,
        klass=klass,
        variables=variable_set.names,
        M=tuple(M),
        h=(rhs,) * len(SYSTEM_ROWS),
    )


def row_windows(rows: Sequence[int] = SYSTEM_ROWS, min_length: int = 6) -> list[tuple[int, ...]]:
    """Contiguous windows of the rows, longest first, the full set excluded"""
    rows = tuple(rows)
    windows = []
    for length in range(len(rows) - 1, min_length - 1, -1):
        for start in range(len(rows) - length + 1):
            windows.append(rows[start : start + length])
    return windows
