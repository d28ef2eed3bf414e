"""
Quadratic-partition parameters
Normalizes the primitive root, reads X, Y, A, B, C, D, U, V, D0..D7 off the
five Jacobi sums J(6,12), J(4,12), J(3,12), J(1,12), J(1,2), and computes the
class tuple (F1, V1, Z, T) that selects a coefficient table.
"""

from __future__ import annotations

# Standard library imports
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, Optional

# Local imports
from ..errors import InputError, InvariantViolation, NoAdmissibleGenerator, NotOneModN
from ..field import PrimeContext, find_primitive_root, load_or_build, rebase
from .cycloint import ORDER, SubBasis, decompose, jacobi_sum

logger = logging.getLogger(__name__)

ADMISSIBLE_Z = (0, 2, 4, 6)
ADMISSIBLE_T = (0, 2, 4)

PARAM_NAMES = ("X", "Y", "A", "B", "C", "D", "U", "V") + tuple(f"D{j}" for j in range(8))
# Parameters that vanish only when p is a perfect square
NONZERO_PARAMS = ("Y", "B", "D", "V")

RECORD_KEYS = ("p", "g", "f", "F1", "V1", "Z", "T") + PARAM_NAMES


@dataclass(frozen=True, order=True)
class ClassTuple:
    """(F1, V1, Z, T): parity of f, parity of V, ind(2) mod 12, ind(3) mod 8"""

    F1: int
    V1: int
    Z: int
    T: int

    def __post_init__(self):
        if (
            self.F1 not in (0, 1)
            or self.V1 not in (0, 1)
            or self.Z not in ADMISSIBLE_Z
            or self.T not in ADMISSIBLE_T
        ):
            raise InputError(
                f"Illegal class tuple ({self.F1},{self.V1},{self.Z},{self.T}): "
                f"need F1,V1 ∈ {{0,1}}, Z ∈ {set(ADMISSIBLE_Z)}, T ∈ {set(ADMISSIBLE_T)}"
            )

    @classmethod
    def parse(cls, text: str) -> ClassTuple:
        """'1,1,4,0' or '1_1_4_0'"""
        parts = text.replace("_", ",").split(",")
        if len(parts) != 4:
            raise InputError(f"Class tuple needs four components F1,V1,Z,T: {text!r}")
        try:
            return cls(*(int(x) for x in parts))
        except ValueError:
            raise InputError(f"Class tuple components must be integers: {text!r}")

    @classmethod
    def from_dict(cls, data: Dict) -> ClassTuple:
        return cls(int(data["F1"]), int(data["V1"]), int(data["Z"]), int(data["T"]))

    def as_dict(self) -> Dict[str, int]:
        return {"F1": self.F1, "V1": self.V1, "Z": self.Z, "T": self.T}

    @property
    def label(self) -> str:
        return f"{self.F1}_{self.V1}_{self.Z}_{self.T}"

    def __str__(self):
        return f"({self.F1},{self.V1},{self.Z},{self.T})"


def all_classes(F1: Optional[int] = None) -> list[ClassTuple]:
    """The 48 class tuples in canonical order (optionally one parity of f)"""
    return [
        ClassTuple(f1, v1, z, t)
        for f1 in (0, 1)
        if F1 is None or f1 == F1
        for v1 in (0, 1)
        for z in ADMISSIBLE_Z
        for t in ADMISSIBLE_T
    ]


@dataclass(frozen=True)
class JacobiParams:
    X: int
    Y: int
    A: int
    B: int
    C: int
    D: int
    U: int
    V: int
    Dj: tuple[int, ...]
    klass: ClassTuple

    def values(self) -> tuple[int, ...]:
        """The sixteen parameters in PARAM_NAMES order"""
        return (self.X, self.Y, self.A, self.B, self.C, self.D, self.U, self.V) + tuple(self.Dj)

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(PARAM_NAMES, self.values()))

    def vector(self, p: int) -> tuple[int, ...]:
        """(p, 1, X, ..., D7), the order of a coefficient row"""
        return (p, 1) + self.values()


def _check_24(p: int):
    if p % ORDER != 1:
        raise NotOneModN(p, ORDER)


def _class_residues(ind2: int, ind3: int, k_inv: int, p: int) -> tuple[int, int]:
    return (ind2 * k_inv) % (p - 1) % 12, (ind3 * k_inv) % (p - 1) % 8


def admissible_generators(base: PrimeContext) -> Iterator[int]:
    """Primitive roots g (increasing) with ind_g(2) mod 12 ∈ Z-set and ind_g(3) mod 8 ∈ T-set"""
    p = base.p
    ind2, ind3 = int(base.ind[2]), int(base.ind[3])
    for g in range(2, p):
        k = int(base.ind[g])
        if gcd(k, p - 1) != 1:
            continue
        z, t = _class_residues(ind2, ind3, pow(k, -1, p - 1), p)
        if z in ADMISSIBLE_Z and t in ADMISSIBLE_T:
            yield g


def normalize_generator(
    p: int, generator: Optional[int] = None, exhaustive: bool = True, cache=None
) -> PrimeContext:
    """Context for the least admissible primitive root of p.

    With a pinned generator and exhaustive search disabled, the pinned root
    must itself be admissible.
    """
    _check_24(p)
    base = load_or_build(p, ORDER, find_primitive_root(p), cache=cache)

    if generator is not None:
        pinned = rebase(base, generator)
        z = int(pinned.ind[2]) % 12
        t = int(pinned.ind[3]) % 8
        if z in ADMISSIBLE_Z and t in ADMISSIBLE_T:
            return pinned
        if not exhaustive:
            raise NoAdmissibleGenerator(p, pinned=generator)

    g = next(admissible_generators(base), None)
    if g is None:
        raise NoAdmissibleGenerator(p)
    return base if g == base.g else rebase(base, g)


def class_of(ctx: PrimeContext, params: JacobiParams) -> ClassTuple:
    return ClassTuple(
        F1=ctx.f % 2,
        V1=params.V % 2,
        Z=int(ctx.ind[2]) % 12,
        T=int(ctx.ind[3]) % 8,
    )


def _half(value: int, name: str, p: int) -> int:
    if value % 2:
        raise InvariantViolation(f"{name} coordinate {value} is odd", p=p)
    return value // 2


def extract_params(ctx: PrimeContext) -> JacobiParams:
    """Sixteen integer parameters and the class tuple for a normalized context"""
    p = ctx.p
    _check_24(p)

    r, s = decompose(jacobi_sum(ctx, 6, 12), SubBasis.I)
    X, Y = -r, _half(s, "i", p)

    r, s = decompose(jacobi_sum(ctx, 4, 12), SubBasis.I_SQRT3)
    A, B = -r, s

    r, s = decompose(jacobi_sum(ctx, 3, 12), SubBasis.I_SQRT2)
    C, D = -r, s

    r, s = decompose(jacobi_sum(ctx, 1, 12), SubBasis.I_SQRT6)
    U, V = r, _half(s, "i√6", p)

    Dj = jacobi_sum(ctx, 1, 2).c

    Z = int(ctx.ind[2]) % 12
    T = int(ctx.ind[3]) % 8
    if Z not in ADMISSIBLE_Z or T not in ADMISSIBLE_T:
        raise InvariantViolation(f"generator {ctx.g} not normalized (Z={Z}, T={T})", p=p)

    params = JacobiParams(
        X=X, Y=Y, A=A, B=B, C=C, D=D, U=U, V=V, Dj=tuple(Dj),
        klass=ClassTuple(ctx.f % 2, V % 2, Z, T),
    )
    validate_params(p, params)
    return params


def validate_params(p: int, params: JacobiParams):
    """Raise InvariantViolation naming the first failed identity"""
    X, Y, A, B = params.X, params.Y, params.A, params.B
    C, D, U, V = params.C, params.D, params.U, params.V
    checks = (
        (X * X + 4 * Y * Y == p, "p = X² + 4Y²"),
        (X % 4 == 1, "X ≡ 1 (mod 4)"),
        (A * A + 3 * B * B == p, "p = A² + 3B²"),
        (A % 6 == 1, "A ≡ 1 (mod 6)"),
        (C * C + 2 * D * D == p, "p = C² + 2D²"),
        (C % 4 == 1, "C ≡ 1 (mod 4)"),
        (U * U + 24 * V * V == p, "p = U² + 24V²"),
        ((U + C) % 3 == 0, "U ≡ −C (mod 3)"),
        (all(getattr(params, name) != 0 for name in NONZERO_PARAMS), "Y, B, D, V ≠ 0"),
        (params.klass.V1 == V % 2, "V1 ≡ V (mod 2)"),
    )
    for ok, identity in checks:
        if not ok:
            logger.error(f"Parameter extraction failed at p={p}: {identity}")
            raise InvariantViolation(identity, p=p)


# Serialization


def param_record(ctx: PrimeContext, params: JacobiParams) -> Dict[str, int]:
    """Flat JSON record with exactly RECORD_KEYS, in that order"""
    record = {
        "p": ctx.p,
        "g": ctx.g,
        "f": ctx.f,
        **params.klass.as_dict(),
    }
    record.update(params.as_dict())
    return record


def params_from_record(record: Dict) -> JacobiParams:
    missing = [k for k in RECORD_KEYS if k not in record]
    if missing:
        raise InputError(f"Parameter record lacks keys: {', '.join(missing)}")
    return JacobiParams(
        X=int(record["X"]),
        Y=int(record["Y"]),
        A=int(record["A"]),
        B=int(record["B"]),
        C=int(record["C"]),
        D=int(record["D"]),
        U=int(record["U"]),
        V=int(record["V"]),
        Dj=tuple(int(record[f"D{j}"]) for j in range(8)),
        klass=ClassTuple.from_dict(record),
    )
