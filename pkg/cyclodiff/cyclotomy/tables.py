"""
Coefficient tables
For one class tuple, 576 rows of 18 integers expressing 576·C₂₄(s,t) in
(p, 1, X, Y, A, B, C, D, U, V, D0, ..., D7). Tables are fitted exactly from
harvested primes and checked against held-out primes.
"""

from __future__ import annotations

# Standard library imports
import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

# Third-party imports
import numpy as np

# Local imports
from ..errors import (
    ClassMismatch,
    InputError,
    NonIntegralCoefficient,
    NonZeroOmitted,
    RankDeficient,
    ValidationFailure,
)
from ..linalg import rank, rref, solve_columns
from ..ring.cycloint import ORDER
from ..ring.params import PARAM_NAMES, ClassTuple, JacobiParams
from .harvest import Observation

logger = logging.getLogger(__name__)

COEFF_ORDER = ("p", "1") + PARAM_NAMES
N_COEFFS = len(COEFF_ORDER)

SHORT6_NAMES = ("X", "Y", "A", "B", "C", "U", "D0", "D2", "D4", "D6")
SHORT6_OMITTED = ("D", "V", "D1", "D3", "D5", "D7")
SHORT8_NAMES = ("X", "Y", "A", "B", "C", "U", "D0", "D4")
SHORT8_OMITTED = SHORT6_OMITTED + ("D2", "D6")


@dataclass(frozen=True)
class CycCoeffRow:
    s: int
    t: int
    coeffs: tuple[int, ...]
    klass: Optional[ClassTuple] = None

    def __post_init__(self):
        if len(self.coeffs) != N_COEFFS:
            raise InputError(f"Row ({self.s},{self.t}) needs {N_COEFFS} coefficients, got {len(self.coeffs)}")

    def coefficient(self, name: str) -> int:
        return self.coeffs[COEFF_ORDER.index(name)]

    def cycfull(self) -> tuple[int, ...]:
        """s, t followed by the 18 coefficients"""
        return (self.s, self.t) + tuple(self.coeffs)


def eval_row(row: CycCoeffRow, p: int, params: JacobiParams) -> int:
    """Dot product of the row with (p, 1, X, ..., D7)"""
    if row.klass is not None and params.klass != row.klass:
        raise ClassMismatch(row.klass, params.klass)
    return sum(c * x for c, x in zip(row.coeffs, params.vector(p)))


def _project(row: CycCoeffRow, keep: Sequence[str], omitted: Sequence[str]) -> tuple[int, ...]:
    nonzero = [name for name in omitted if row.coefficient(name) != 0]
    if nonzero:
        raise NonZeroOmitted(row.s, row.t, nonzero)
    return tuple(row.coefficient(name) for name in keep)


def project_short6(row: CycCoeffRow) -> tuple[int, ...]:
    """Coefficients of X, Y, A, B, C, U, D0, D2, D4, D6"""
    return _project(row, SHORT6_NAMES, SHORT6_OMITTED)


def project_short8(row: CycCoeffRow) -> tuple[int, ...]:
    """Coefficients of X, Y, A, B, C, U, D0, D4"""
    return _project(row, SHORT8_NAMES, SHORT8_OMITTED)


@dataclass(frozen=True)
class CoeffTable:
    klass: ClassTuple
    rows: tuple[CycCoeffRow, ...]
    provenance: tuple[int, ...] = ()
    validated: tuple[int, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        seen = {(r.s, r.t) for r in self.rows}
        if len(self.rows) != ORDER * ORDER or len(seen) != ORDER * ORDER:
            raise InputError(f"Table for {self.klass} must have one row per (s,t), 0 ≤ s,t ≤ 23")

    def row(self, s: int, t: int) -> CycCoeffRow:
        return self.rows[(s % ORDER) * ORDER + (t % ORDER)]

    def coefficient_matrix(self) -> np.ndarray:
        """576×18 int64, row-major in (s,t)"""
        return np.array([r.coeffs for r in self.rows], dtype=np.int64)

    def evaluate(self, p: int, params: JacobiParams) -> np.ndarray:
        """All 576 values of 576·C₂₄(s,t) as a 24×24 array"""
        if params.klass != self.klass:
            raise ClassMismatch(self.klass, params.klass)
        vec = np.array(params.vector(p), dtype=np.int64)
        return (self.coefficient_matrix() @ vec).reshape(ORDER, ORDER)

    # Serialization

    def to_dict(self) -> Dict:
        return {
            "class": self.klass.as_dict(),
            "order": list(COEFF_ORDER),
            "rows": [{"s": r.s, "t": r.t, "coeffs": list(r.coeffs)} for r in self.rows],
            "provenance": list(self.provenance),
            "validated": list(self.validated),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> CoeffTable:
        if list(data.get("order", [])) != list(COEFF_ORDER):
            raise InputError(f"Table coefficient order must be {list(COEFF_ORDER)}")
        klass = ClassTuple.from_dict(data["class"])
        rows = sorted(
            (
                CycCoeffRow(int(r["s"]), int(r["t"]), tuple(int(c) for c in r["coeffs"]), klass)
                for r in data["rows"]
            ),
            key=lambda r: (r.s, r.t),
        )
        return cls(
            klass=klass,
            rows=tuple(rows),
            provenance=tuple(int(p) for p in data.get("provenance", [])),
            validated=tuple(int(p) for p in data.get("validated", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_csv(self) -> str:
        """Header s,t followed by the coefficient names; one line per row"""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["s", "t"] + list(COEFF_ORDER))
        for r in self.rows:
            writer.writerow([r.s, r.t] + list(r.coeffs))
        return buf.getvalue()


def save_table(table: CoeffTable, path: str, fmt: str = "json"):
    with open(path, "w") as fh:
        fh.write(table.to_csv() if fmt == "csv" else table.to_json())


def load_table(path: str) -> CoeffTable:
    with open(path) as fh:
        return CoeffTable.from_dict(json.load(fh))


# Derivation


def _select_independent(vectors: Sequence[Sequence[int]]) -> List[int]:
    """Indices of a maximal independent prefix-greedy subset of the rows"""
    chosen: List[int] = []
    basis: List[Sequence[int]] = []
    for i, vec in enumerate(vectors):
        if rank(basis + [vec]) > len(basis):
            basis.append(vec)
            chosen.append(i)
            if len(chosen) == N_COEFFS:
                break
    return chosen


def derive_table(
    klass: ClassTuple,
    observations: Sequence[Observation],
    held_out: int = 5,
    allow_dependency: bool = False,
) -> CoeffTable:
    """Fit all 576 rows exactly, then check every fitting and held-out prime.

    The last held_out observations are kept out of the fit.
    """
    for obs in observations:
        if obs.klass != klass:
            raise ClassMismatch(klass, obs.klass)

    fit = list(observations[: max(0, len(observations) - held_out)])
    holdout = list(observations[len(fit) :])
    vectors = [obs.params.vector(obs.p) for obs in fit]

    chosen = _select_independent(vectors)
    r = len(chosen)
    warnings: List[str] = []
    if r < N_COEFFS:
        if not (allow_dependency and len(fit) >= 2 * N_COEFFS):
            raise RankDeficient(r, len(fit), klass)
        _, pivots = rref(vectors)
        free = [COEFF_ORDER[c] for c in range(N_COEFFS) if c not in pivots]
        message = (
            f"Class {klass}: observation matrix has rank {r} from {len(fit)} primes; "
            f"coefficients of {', '.join(free)} set to zero"
        )
        logger.warning(message)
        warnings.append(message)

    M = [vectors[i] for i in chosen]
    H = [fit[i].scaled.reshape(-1).tolist() for i in chosen]
    _, solutions, inconsistent = solve_columns(M, H)
    if inconsistent:
        j = inconsistent[0]
        raise ValidationFailure(fit[chosen[0]].p, j // ORDER, j % ORDER)

    rows = []
    for j, sol in enumerate(solutions):
        s, t = divmod(j, ORDER)
        for c in sol:
            if c.denominator != 1:
                raise NonIntegralCoefficient(s, t, c)
        rows.append(CycCoeffRow(s, t, tuple(int(c) for c in sol), klass))

    table = CoeffTable(
        klass=klass,
        rows=tuple(rows),
        provenance=tuple(obs.p for obs in fit),
        validated=tuple(obs.p for obs in holdout),
        warnings=tuple(warnings),
    )
    check_table(table, fit + holdout)
    logger.info(
        f"Derived table {klass} from {len(fit)} primes, validated on {len(holdout)} held out"
    )
    return table


def check_table(table: CoeffTable, observations: Iterable[Observation]):
    """Raise ValidationFailure at the first (p, s, t) where the table disagrees with the counts"""
    for obs in observations:
        predicted = table.evaluate(obs.p, obs.params)
        bad = np.argwhere(predicted != obs.scaled)
        if bad.size:
            s, t = (int(x) for x in bad[0])
            logger.error(f"Table {table.klass} fails at p={obs.p}, (s,t)=({s},{t})")
            raise ValidationFailure(obs.p, s, t)
