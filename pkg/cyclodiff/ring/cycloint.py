"""
Exact arithmetic in Z[β], β = exp(2πi/24)
Elements live on the power basis 1, β, ..., β⁷ modulo the minimal polynomial
β⁸ − β⁴ + 1.
"""

from __future__ import annotations

# Standard library imports
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

# Third-party imports
import numpy as np

# Local imports
from ..errors import NotInSpan, NotOneModN

ORDER = 24
DEGREE = 8


def _reduce(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Fold degrees ≥ 8 down with β^k = β^(k−4) − β^(k−8), highest first"""
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        top = c[k]
        if top:
            c[k - 4] += top
            c[k - 8] -= top
            c[k] = 0
    c.extend([0] * (DEGREE - len(c)))
    return tuple(int(x) for x in c[:DEGREE])


@dataclass(frozen=True)
class CycloInt:
    """c₀ + c₁β + ... + c₇β⁷ in canonical form"""

    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != DEGREE:
            raise ValueError(f"CycloInt needs {DEGREE} coefficients, got {len(self.c)}")

    @classmethod
    def from_int(cls, x: int) -> CycloInt:
        return cls((int(x),) + (0,) * (DEGREE - 1))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> CycloInt:
        return cls(_reduce(list(coeffs)))

    @classmethod
    def from_exponent_counts(cls, counts: Sequence[int]) -> CycloInt:
        """Σ counts[k]·β^k for k = 0..23"""
        acc = [0] * DEGREE
        for k, n in enumerate(counts):
            if n:
                for j, b in enumerate(_BETA_POWERS[k % ORDER].c):
                    acc[j] += int(n) * b
        return cls(tuple(acc))

    def _coerce(self, other) -> CycloInt | None:
        if isinstance(other, CycloInt):
            return other
        if isinstance(other, (int, np.integer)):
            return CycloInt.from_int(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloInt(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return CycloInt(_reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("Negative powers are not defined in Z[β]")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, k: int) -> CycloInt:
        """Image under β ↦ β^k (k a unit mod 24)"""
        acc = [0] * DEGREE
        for j, a in enumerate(self.c):
            if a:
                for i, b in enumerate(_BETA_POWERS[(j * k) % ORDER].c):
                    acc[i] += a * b
        return CycloInt(tuple(acc))

    def conjugate(self) -> CycloInt:
        return self.galois(ORDER - 1)

    @property
    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __str__(self):
        terms = []
        for j, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if j == 0 else f"{a}β^{j}")
        return " + ".join(terms) if terms else "0"


def beta_power(k: int) -> CycloInt:
    """Canonical form of β^(k mod 24)"""
    return _BETA_POWERS[k % ORDER]


def _raw_beta_power(k: int) -> CycloInt:
    e = [0] * (k + 1)
    e[k] = 1
    return CycloInt(_reduce(e))


_BETA_POWERS = tuple(_raw_beta_power(k) for k in range(ORDER))
ZERO = CycloInt.from_int(0)
ONE = CycloInt.from_int(1)


def mul(a: CycloInt, b: CycloInt) -> CycloInt:
    return a * b


def conjugate(a: CycloInt) -> CycloInt:
    return a.conjugate()


# Sub-basis constants for the quadratic subfields
I = beta_power(6)
SQRT3 = beta_power(2) + beta_power(22)
I_SQRT3 = 2 * beta_power(4) - 1
I_SQRT2 = beta_power(3) + beta_power(9)
I_SQRT6 = I_SQRT2 * SQRT3

for _name, _elem, _square in (
    ("i", I, -1),
    ("√3", SQRT3, 3),
    ("i√3", I_SQRT3, -3),
    ("i√2", I_SQRT2, -2),
    ("i√6", I_SQRT6, -6),
):
    if _elem * _elem != CycloInt.from_int(_square):
        raise ArithmeticError(f"({_name})² ≠ {_square} in Z[β]")


class SubBasis(Enum):
    """Second element of the pair {1, w} spanning a quadratic sub-lattice"""

    I = ("i", I)
    I_SQRT3 = ("i√3", I_SQRT3)
    I_SQRT2 = ("i√2", I_SQRT2)
    I_SQRT6 = ("i√6", I_SQRT6)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def element(self) -> CycloInt:
        return self.value[1]


def decompose(z: CycloInt, basis: SubBasis) -> tuple[int, int]:
    """Unique integers (r, s) with z = r + s·w"""
    w = basis.element
    k = next(j for j in range(1, DEGREE) if w.c[j])
    s, rem = divmod(z.c[k], w.c[k])
    if rem:
        raise NotInSpan(z, f"{{1, {basis.label}}}")
    r = z.c[0] - s * w.c[0]
    if CycloInt.from_int(r) + s * w != z:
        raise NotInSpan(z, f"{{1, {basis.label}}}")
    return r, s


# Jacobi sums


def jacobi_exponent_counts(ctx, u: int, v: int) -> np.ndarray:
    """How often each exponent ind(x)·u + ind(1−x)·v ≡ k (mod 24) occurs, x = 2..p−1"""
    p = ctx.p
    if (p - 1) % ORDER:
        raise NotOneModN(p, ORDER)
    x = np.arange(2, p, dtype=np.int64)
    exps = (ctx.ind[x] * (u % ORDER) + ctx.ind[p + 1 - x] * (v % ORDER)) % ORDER
    return np.bincount(exps, minlength=ORDER)


def jacobi_sum(ctx, u: int, v: int) -> CycloInt:
    """J(u,v) = Σ_{x=2}^{p−1} β^(ind(x)·u + ind(1−x)·v)"""
    return CycloInt.from_exponent_counts(jacobi_exponent_counts(ctx, u, v).tolist())
