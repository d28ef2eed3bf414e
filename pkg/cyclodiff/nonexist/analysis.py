"""
Contradiction pipeline
Solves a class's linear system exactly, then looks for a reason no integer
parameter vector can satisfy it: a forced zero among Y, B, D, V, a forced
non-integer, a partition identity X² + 4Y² = A² + 3B² without admissible
rational roots, or an integrality relation read off the full table.
"""

from __future__ import annotations

# Standard library imports
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

# Third-party imports
from tqdm import tqdm

# Local imports
from ..cyclotomy.harvest import Observation, make_executor
from ..cyclotomy.tables import CoeffTable
from ..errors import ClassMismatch, InputError
from ..linalg import (
    AffineSolution,
    Inconsistent,
    integer_obstruction,
    modular_row_basis,
    rank,
    rref,
    solve_affine,
)
from ..ring.params import NONZERO_PARAMS, PARAM_NAMES, ClassTuple
from .systems import SYSTEM_ROWS, Mode, SystemSpec, VariableSet, build_system, row_windows

logger = logging.getLogger(__name__)

SCALE = 576

# Σ weight·var² = 0 for each identity; both sides equal p
PRIMARY_PARTITION = ("X²+4Y² = A²+3B²", (("X", 1), ("Y", 4), ("A", -1), ("B", -3)))
EXTRA_PARTITIONS = (
    ("X²+4Y² = C²+2D²", (("X", 1), ("Y", 4), ("C", -1), ("D", -2))),
    ("X²+4Y² = U²+24V²", (("X", 1), ("Y", 4), ("U", -1), ("V", -24))),
)


class VerdictKind(Enum):
    FORCED_ZERO = "ForcedZero"
    FORCED_NON_INTEGER = "ForcedNonInteger"
    PARTITION_NO_RATIONAL_ROOT = "PartitionNoRationalRoot"
    PARTITION_NON_INTEGER_ROOT = "PartitionNonIntegerRoot"
    AUXILIARY_RELATION_VIOLATION = "AuxiliaryRelationViolation"
    INCONSISTENT = "Inconsistent"
    UNRESOLVED = "Unresolved"

    @property
    def is_contradiction(self) -> bool:
        return self is not VerdictKind.UNRESOLVED


def _frac_str(x) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    variable: Optional[str] = None
    value: Optional[Fraction] = None
    roots: tuple[Fraction, ...] = ()
    description: str = ""

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "variable": self.variable,
            "value": None if self.value is None else _frac_str(self.value),
            "roots": [_frac_str(r) for r in self.roots],
            "description": self.description,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> Verdict:
        return cls(
            kind=VerdictKind(data["kind"]),
            variable=data.get("variable"),
            value=None if data.get("value") is None else Fraction(data["value"]),
            roots=tuple(Fraction(r) for r in data.get("roots", [])),
            description=data.get("description", ""),
        )


# Forced values


def _integral_unit(coeffs: Sequence[Fraction]) -> Fraction:
    """u with Z + Σ coeffs[k]·Z = u·Z"""
    nonzero = [Fraction(c) for c in coeffs if c]
    L = lcm(*(c.denominator for c in nonzero))
    m = gcd(*(int(c * L) for c in nonzero))
    return Fraction(gcd(L, m), L)


def _joint_system(sol: AffineSolution) -> tuple[list[list[Fraction]], list[Fraction]]:
    """y − N·y_free = particular over all variables, free coordinates identified with their variables"""
    free_cols = [sol.index(v) for v in sol.free_variables]
    n = len(sol.variables)
    M, h = [], []
    for i in range(n):
        if i in free_cols:
            continue
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        for k, col in enumerate(free_cols):
            row[col] -= sol.basis[k][i]
        M.append(row)
        h.append(sol.particular[i])
    return M, h


def forced_value_check(sol: AffineSolution) -> list[Verdict]:
    """Findings on individually forced values; ForcedZero findings come first.

    When the free parameters are variables of the system (solve_affine output)
    integrality is also tested per variable and jointly.
    """
    zero: List[Verdict] = []
    non_integer: List[Verdict] = []
    for var in sol.variables:
        form = sol.coordinate(var)
        c = form.constant
        if form.is_constant:
            if var in NONZERO_PARAMS and c == 0:
                zero.append(
                    Verdict(
                        VerdictKind.FORCED_ZERO,
                        variable=var,
                        value=Fraction(0),
                        description=f"{var}=0, which contradicts p being prime",
                    )
                )
            elif c.denominator != 1:
                non_integer.append(
                    Verdict(
                        VerdictKind.FORCED_NON_INTEGER,
                        variable=var,
                        value=c,
                        description=f"{var}={c} is not an integer",
                    )
                )
        elif sol.free_variables is not None:
            unit = _integral_unit(form.coeffs)
            if (c / unit).denominator != 1:
                non_integer.append(
                    Verdict(
                        VerdictKind.FORCED_NON_INTEGER,
                        variable=var,
                        value=c,
                        description=f"{var} = {form} is never an integer for integer {', '.join(sol.free_variables)}",
                    )
                )

    if not non_integer and sol.free_variables:
        M, h = _joint_system(sol)
        obstruction = integer_obstruction(M, h)
        if obstruction is not None:
            non_integer.append(
                Verdict(
                    VerdictKind.FORCED_NON_INTEGER,
                    value=obstruction.value,
                    description=obstruction.describe(sol.variables),
                )
            )
    return zero + non_integer


# Partition identities


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    x = Fraction(x)
    if x < 0:
        return None
    num, den = isqrt(x.numerator), isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class _Quadratic:
    """wᵀ·A·w + b·w + c"""

    name: str
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    c: Fraction

    def __call__(self, w: Sequence[Fraction]) -> Fraction:
        k = len(self.b)
        quad = sum((self.A[i][j] * w[i] * w[j] for i in range(k) for j in range(k)), Fraction(0))
        return quad + sum((bi * wi for bi, wi in zip(self.b, w)), Fraction(0)) + self.c

    @property
    def is_trivial(self) -> bool:
        return self.c == 0 and not any(self.b) and not any(any(row) for row in self.A)


def _expand(name: str, terms, forms: Mapping[str, tuple[Fraction, tuple[Fraction, ...]]], k: int) -> _Quadratic:
    A = [[Fraction(0)] * k for _ in range(k)]
    b = [Fraction(0)] * k
    c = Fraction(0)
    for var, weight in terms:
        const, lin = forms[var]
        c += weight * const * const
        for i in range(k):
            b[i] += 2 * weight * const * lin[i]
            for j in range(k):
                A[i][j] += weight * lin[i] * lin[j]
    return _Quadratic(name, tuple(tuple(row) for row in A), tuple(b), c)


@dataclass(frozen=True)
class PartitionOutcome:
    """verdict is None when the identities leave admissible points.

    survivors are the fixed variable values of each admissible root; empty
    with conclusive=False when the identities did not pin anything down.
    """

    verdict: Optional[Verdict]
    roots: tuple[Fraction, ...] = ()
    root_values: tuple[Dict[str, Fraction], ...] = ()
    survivors: tuple[Dict[str, Fraction], ...] = ()
    conclusive: bool = True


def _rejection(values: Mapping[str, Fraction]) -> Optional[str]:
    for var, value in values.items():
        if Fraction(value).denominator != 1:
            return f"{var}={value} is not an integer"
    for var in NONZERO_PARAMS:
        if var in values and values[var] == 0:
            return f"{var}=0"
    return None


def partition_contradiction(sol: AffineSolution, epsilon: int, extra_pairs: bool = False) -> PartitionOutcome:
    """Substitute the affine solution into X² + 4Y² − A² − 3B² = 0 (and, with
    extra_pairs, the C,D and U,V identities when those variables are present)."""
    identities = [PRIMARY_PARTITION]
    if extra_pairs:
        identities += [
            item for item in EXTRA_PARTITIONS if all(v in sol.variables for v, _ in item[1])
        ]
    qvars = []
    for _, terms in identities:
        for var, _ in terms:
            if var not in qvars:
                qvars.append(var)
    coords = {var: sol.coordinate(var) for var in qvars}

    L = [list(coords[var].coeffs) for var in qvars]
    r = rank(L) if sol.d else 0
    direct = r == sol.d
    if direct:
        forms = {var: (coords[var].constant, tuple(coords[var].coeffs)) for var in qvars}
    else:
        # w = R·a over the row space of the linear parts
        _, pivots = rref(L)
        forms = {
            var: (coords[var].constant, tuple(Fraction(coords[var].coeffs[c]) for c in pivots))
            for var in qvars
        }

    quadratics = [_expand(name, terms, forms, r) for name, terms in identities]
    primary = quadratics[0]

    def values_at(w: Sequence[Fraction]) -> Dict[str, Fraction]:
        if direct:
            return sol.evaluate(w)
        return {var: const + sum((a * x for a, x in zip(lin, w)), Fraction(0)) for var, (const, lin) in forms.items()}

    def outcome_for(roots: Sequence[tuple[Fraction, ...]], scalar_roots: tuple[Fraction, ...]) -> PartitionOutcome:
        root_values = tuple(values_at(w) for w in roots)
        survivors = tuple(v for v in root_values if _rejection(v) is None)
        if survivors:
            return PartitionOutcome(None, scalar_roots, root_values, survivors)
        reasons = "; ".join(_rejection(v) for v in root_values)
        if scalar_roots:
            shown = ", ".join(f"a={a} (Y={v['Y']}, B={v['B']})" for a, v in zip(scalar_roots, root_values))
            lead = f"{primary.name} forces {shown}"
        else:
            lead = f"{primary.name} holds at the forced values"
        return PartitionOutcome(
            Verdict(
                VerdictKind.PARTITION_NON_INTEGER_ROOT,
                roots=scalar_roots,
                description=f"{lead}, rejected: {reasons}",
            ),
            scalar_roots,
            root_values,
        )

    inconclusive = PartitionOutcome(None, conclusive=False)

    if r == 0:
        for q in quadratics:
            if q.c != 0:
                return PartitionOutcome(
                    Verdict(
                        VerdictKind.PARTITION_NO_RATIONAL_ROOT,
                        description=f"{q.name} fails by {q.c} at the forced values (ε={epsilon})",
                    )
                )
        return outcome_for([()], ())

    if r == 1:
        nontrivial = [q for q in quadratics if not q.is_trivial]
        if not nontrivial:
            return inconclusive
        q = nontrivial[0]
        alpha, beta, gamma = q.A[0][0], q.b[0], q.c
        # roots along the integral direction L·basis, a = t/L
        scale = sol.direction_scale() if direct else 1
        if alpha != 0:
            disc = beta * beta - 4 * alpha * gamma
            root = _rational_sqrt(disc)
            if root is None:
                return PartitionOutcome(
                    Verdict(
                        VerdictKind.PARTITION_NO_RATIONAL_ROOT,
                        description=(
                            f"{q.name} reads {alpha * scale * scale}·a² + {beta * scale}·a + {gamma} = 0 (ε={epsilon}); "
                            f"discriminant {disc * scale * scale} is not a rational square"
                        ),
                    )
                )
            candidates = sorted({(-beta + root) / (2 * alpha), (-beta - root) / (2 * alpha)})
        elif beta != 0:
            candidates = [-gamma / beta]
        else:
            candidates = []
        candidates = [a for a in candidates if all(other((a,)) == 0 for other in nontrivial[1:])]
        if not candidates:
            return PartitionOutcome(
                Verdict(
                    VerdictKind.PARTITION_NO_RATIONAL_ROOT,
                    description=f"{', '.join(x.name for x in nontrivial)} have no common rational root (ε={epsilon})",
                )
            )
        return outcome_for([(a,) for a in candidates], tuple(a / scale for a in candidates))

    if r == 2:
        (a00, a01), (_, a11) = primary.A
        det = a00 * a11 - a01 * a01
        if det == 0:
            if primary.is_trivial:
                return inconclusive
            if not any(any(row) for row in primary.A) and not any(primary.b):
                return PartitionOutcome(
                    Verdict(VerdictKind.PARTITION_NO_RATIONAL_ROOT, description=f"{primary.name} fails by {primary.c}")
                )
            return inconclusive
        # centre: 2A·w0 = −b
        b0, b1 = primary.b
        w0 = ((-b0 * a11 + b1 * a01) / (2 * det), (-b1 * a00 + b0 * a01) / (2 * det))
        if primary(w0) != 0:
            return inconclusive
        square = _rational_sqrt(-det)
        if square is not None:
            return inconclusive
        outcome = outcome_for([w0], ())
        if outcome.verdict is None:
            return outcome
        reason = _rejection(outcome.root_values[0])
        return PartitionOutcome(
            Verdict(
                VerdictKind.PARTITION_NO_RATIONAL_ROOT,
                description=(
                    f"{primary.name} is homogeneous about its centre with −det = {-det}, "
                    f"not a rational square; the only rational point has {reason}"
                ),
            ),
            (),
            outcome.root_values,
        )

    return inconclusive


# Auxiliary integrality relations

# (variable weights, modulus, residue) holding for every valid parameter vector
_CONGRUENCES = (
    ({"X": 1}, 4, 1),
    ({"A": 1}, 6, 1),
    ({"C": 1}, 4, 1),
    ({"U": 1, "C": 1}, 3, 0),
)


@lru_cache(maxsize=64)
def table_congruences(table: CoeffTable) -> tuple[tuple[int, ...], ...]:
    """Generators of the rows whose values must be ≡ 0 (mod 576)"""
    return tuple(tuple(row) for row in modular_row_basis([r.coeffs for r in table.rows], SCALE))


def _auxiliary_system(
    klass: ClassTuple,
    sys_full: SystemSpec,
    basis: Sequence[Sequence[int]],
    fixed: Mapping[str, Fraction],
):
    congruences = list(_CONGRUENCES) + [({"V": 1}, 2, klass.V1), ({"p": 1}, 48, 1 + 24 * klass.F1)]
    names = (
        ["p"]
        + list(PARAM_NAMES)
        + [f"w{k + 1}" for k in range(len(basis))]
        + [f"k{k + 1}" for k in range(len(congruences))]
    )
    col = {name: i for i, name in enumerate(names)}
    width = len(names)
    M, h = [], []

    def add(entries: Mapping[str, Fraction], value):
        row = [Fraction(0)] * width
        for name, coeff in entries.items():
            row[col[name]] += Fraction(coeff)
        M.append(row)
        h.append(Fraction(value))

    for coeffs, rhs in zip(sys_full.M, sys_full.h):
        add(dict(zip(PARAM_NAMES, coeffs)), rhs)
    for var, value in fixed.items():
        add({var: 1}, value)
    if "X" in fixed and "Y" in fixed:
        add({"p": 1}, fixed["X"] ** 2 + 4 * fixed["Y"] ** 2)
    for k, row in enumerate(basis):
        entries = {"p": row[0], f"w{k + 1}": -SCALE}
        entries.update({name: c for name, c in zip(PARAM_NAMES, row[2:]) if c})
        add(entries, -row[1])
    for k, (weights, modulus, residue) in enumerate(congruences):
        add({**weights, f"k{k + 1}": -modulus}, residue)
    return M, h, names


def auxiliary_relation_check(
    table: CoeffTable,
    sys_full: SystemSpec,
    roots: Sequence[Mapping[str, Fraction]] = (),
) -> Optional[Verdict]:
    """Reject every surviving assignment (or, with none, the bare system) through
    integer relations: every table row is ≡ 0 (mod 576) and the parameter
    congruences hold. None when some assignment stays integrally consistent."""
    if sys_full.variables != PARAM_NAMES:
        raise InputError("auxiliary_relation_check needs the full 16-variable system")
    if sys_full.klass != table.klass:
        raise ClassMismatch(table.klass, sys_full.klass)
    basis = table_congruences(table)
    descriptions = []
    for fixed in list(roots) or [{}]:
        M, h, names = _auxiliary_system(table.klass, sys_full, basis, fixed)
        obstruction = integer_obstruction(M, h)
        if obstruction is None:
            return None
        descriptions.append(obstruction.describe(names))
    return Verdict(
        VerdictKind.AUXILIARY_RELATION_VIOLATION,
        description="; ".join(descriptions),
    )


# Reports


@dataclass(frozen=True)
class Witness:
    solution: Optional[AffineSolution] = None
    roots: tuple[Fraction, ...] = ()
    root_values: tuple[Dict[str, Fraction], ...] = ()
    attempts: tuple[Dict, ...] = ()
    notes: tuple[str, ...] = ()

    def forced_values(self) -> Dict[str, Fraction]:
        """Variables whose value does not depend on the free parameters"""
        if self.solution is None:
            return {}
        out = {}
        for var in self.solution.variables:
            form = self.solution.coordinate(var)
            if form.is_constant:
                out[var] = form.constant
        return out

    def to_dict(self) -> Dict:
        sol = self.solution
        return {
            "variables": list(sol.variables) if sol else [],
            "free_variables": list(sol.free_variables) if sol and sol.free_variables is not None else None,
            "particular": [_frac_str(x) for x in sol.particular] if sol else [],
            "basis": [[_frac_str(x) for x in vec] for vec in sol.basis] if sol else [],
            "roots": [_frac_str(r) for r in self.roots],
            "root_values": [{k: _frac_str(v) for k, v in values.items()} for values in self.root_values],
            "attempts": list(self.attempts),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> Witness:
        solution = None
        if data.get("variables"):
            free = data.get("free_variables")
            solution = AffineSolution(
                variables=tuple(data["variables"]),
                particular=tuple(Fraction(x) for x in data["particular"]),
                basis=tuple(tuple(Fraction(x) for x in vec) for vec in data["basis"]),
                free_variables=None if free is None else tuple(free),
            )
        return cls(
            solution=solution,
            roots=tuple(Fraction(r) for r in data.get("roots", [])),
            root_values=tuple(
                {k: Fraction(v) for k, v in values.items()} for values in data.get("root_values", [])
            ),
            attempts=tuple(data.get("attempts", [])),
            notes=tuple(data.get("notes", [])),
        )


@dataclass(frozen=True)
class ContradictionReport:
    klass: ClassTuple
    mode: Mode
    epsilon: int
    verdict: Verdict
    witness: Witness = field(default_factory=Witness)
    rows_used: tuple[int, ...] = SYSTEM_ROWS

    @property
    def is_contradiction(self) -> bool:
        return self.verdict.kind.is_contradiction

    def to_dict(self) -> Dict:
        return {
            "class": self.klass.as_dict(),
            "mode": self.mode.value,
            "epsilon": self.epsilon,
            "verdict": self.verdict.kind.value,
            "witness": {**self.witness.to_dict(), "finding": self.verdict.to_dict()},
            "rows_used": list(self.rows_used),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> ContradictionReport:
        return cls(
            klass=ClassTuple.from_dict(data["class"]),
            mode=Mode(data["mode"]),
            epsilon=int(data["epsilon"]),
            verdict=Verdict.from_dict(data["witness"]["finding"]),
            witness=Witness.from_dict(data["witness"]),
            rows_used=tuple(int(s) for s in data["rows_used"]),
        )


def _stage_verdict(
    sol: AffineSolution,
    part: PartitionOutcome,
    table: CoeffTable,
    sys_full: SystemSpec,
) -> Optional[Verdict]:
    forced = forced_value_check(sol)
    if forced:
        return forced[0]
    if part.verdict is not None:
        return part.verdict
    return auxiliary_relation_check(table, sys_full, part.survivors)


_DECISIVE = (
    VerdictKind.PARTITION_NO_RATIONAL_ROOT,
    VerdictKind.PARTITION_NON_INTEGER_ROOT,
    VerdictKind.AUXILIARY_RELATION_VIOLATION,
)


def analyze_class(
    table: CoeffTable,
    mode: Mode,
    epsilon: int,
    extra_pairs: bool = False,
    variable_set: Optional[VariableSet] = None,
    windows: bool = True,
) -> ContradictionReport:
    """Full 11-row system first, then contiguous row windows from 10 rows down to 6.

    A verdict on the full system wins. Among the windows the first partition or
    auxiliary verdict wins, then the first forced-value verdict. An inconsistent
    full system is kept as a witness note and only becomes the verdict when no
    window decides the class."""
    system = build_system(table, mode, epsilon, variable_set)
    sys_full = system if system.variables == PARAM_NAMES else build_system(table, mode, epsilon, VariableSet.FULL16)

    attempts: List[Dict] = []
    notes: List[str] = []
    first: Optional[tuple[AffineSolution, PartitionOutcome]] = None
    fallback = None
    full_inconsistent: Optional[Verdict] = None
    for rows in [SYSTEM_ROWS] + (row_windows() if windows else []):
        full = rows == SYSTEM_ROWS
        sub = system if full else system.restrict(rows)
        sol = solve_affine(sub.M, sub.h, sub.variables)
        if isinstance(sol, Inconsistent):
            attempts.append({"rows": list(rows), "d": None, "verdict": VerdictKind.INCONSISTENT.value})
            if full:
                full_inconsistent = Verdict(
                    VerdictKind.INCONSISTENT,
                    description=f"rank {sol.rank} < augmented rank {sol.augmented_rank}",
                )
                notes.append(f"rows {_span(rows)}: {full_inconsistent.description}")
            continue

        part = partition_contradiction(sol, epsilon, extra_pairs)
        if first is None:
            first = (sol, part)
        aux_rows = sys_full if full_inconsistent is None else sys_full.restrict(rows)
        verdict = _stage_verdict(sol, part, table, aux_rows)
        attempts.append(
            {"rows": list(rows), "d": sol.d, "verdict": verdict.kind.value if verdict else None}
        )
        if verdict is None:
            continue
        if full or verdict.kind in _DECISIVE:
            logger.debug(f"Class {table.klass} {mode.value} ε={epsilon}: {verdict.kind.value} on rows {list(rows)}")
            return _report(table, mode, epsilon, verdict, (sol, part), rows, attempts, notes)
        if fallback is None:
            fallback = (verdict, (sol, part), rows)

    if fallback is not None:
        verdict, found, rows = fallback
        logger.debug(f"Class {table.klass} {mode.value} ε={epsilon}: {verdict.kind.value} on rows {list(rows)}")
        return _report(table, mode, epsilon, verdict, found, rows, attempts, notes)
    if full_inconsistent is not None:
        logger.debug(f"Class {table.klass} {mode.value} ε={epsilon}: no window resolves the inconsistent system")
        return _report(table, mode, epsilon, full_inconsistent, None, SYSTEM_ROWS, attempts, notes)

    logger.info(f"Class {table.klass} {mode.value} ε={epsilon}: unresolved after {len(attempts)} attempts")
    verdict = Verdict(VerdictKind.UNRESOLVED, description="no stage produced a contradiction")
    return _report(table, mode, epsilon, verdict, first, SYSTEM_ROWS, attempts, notes)


def _span(rows: Sequence[int]) -> str:
    return f"{rows[0]}..{rows[-1]}"


def _report(table, mode, epsilon, verdict, found, rows, attempts, notes=()) -> ContradictionReport:
    sol, part = found if found is not None else (None, PartitionOutcome(None))
    return ContradictionReport(
        klass=table.klass,
        mode=mode,
        epsilon=epsilon,
        verdict=verdict,
        witness=Witness(
            solution=sol,
            roots=part.roots,
            root_values=part.root_values,
            attempts=tuple(attempts),
            notes=tuple(notes),
        ),
        rows_used=tuple(rows),
    )


def _analyze_job(job) -> ContradictionReport:
    table, mode, epsilon, extra_pairs = job
    return analyze_class(table, mode, epsilon, extra_pairs=extra_pairs)


def analyze_tables(
    tables: Iterable[CoeffTable],
    mode: Mode,
    epsilons: Sequence[int] = (0, 1),
    extra_pairs: bool = False,
    jobs: int = 1,
    progress: bool = False,
) -> list[ContradictionReport]:
    """Reports for every table of the mode's parity, in class then ε order"""
    selected = sorted((t for t in tables if t.klass.F1 == mode.parity), key=lambda t: t.klass)
    work = [(t, mode, eps, extra_pairs) for t in selected for eps in epsilons]
    started = time.perf_counter()
    with tqdm(total=len(work), desc=f"Analyzing ({mode.value})", disable=not progress) as bar:
        if jobs <= 1:
            reports = []
            for job in work:
                reports.append(_analyze_job(job))
                bar.update(1)
        else:
            with make_executor(jobs) as executor:
                reports = []
                for report in executor.map(_analyze_job, work):
                    reports.append(report)
                    bar.update(1)
    totals = verdict_totals(reports)
    logger.info(
        f"Analyzed {len(reports)} systems in {time.perf_counter() - started:.1f}s: "
        + ", ".join(f"{k}={v}" for k, v in sorted(totals.items()))
    )
    return reports


def verdict_totals(reports: Iterable[ContradictionReport]) -> Dict[str, int]:
    return dict(Counter(r.verdict.kind.value for r in reports))


def pointwise_soundness(
    table: CoeffTable,
    observations: Iterable[Observation],
    mode: Mode,
) -> list[tuple[int, int]]:
    """(p, ε) pairs among real primes where all 11 counted values meet the set's
    requirement; a sound system leaves this empty"""
    if table.klass.F1 != mode.parity:
        raise ClassMismatch(f"F1={mode.parity} for {mode.value} mode", table.klass)
    hits = []
    for obs in observations:
        if obs.klass != table.klass:
            raise ClassMismatch(table.klass, obs.klass)
        counted = [int(obs.scaled[s, mode.column]) - obs.p for s in SYSTEM_ROWS]
        for epsilon in (0, 1):
            if all(v == mode.criterion_offset(epsilon) for v in counted):
                logger.warning(f"Prime {obs.p} meets the {mode.value} criterion at ε={epsilon}")
                hits.append((obs.p, epsilon))
    return hits
