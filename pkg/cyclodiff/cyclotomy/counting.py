"""
Cyclotomic numbers
C_n(s,t) = #{N : ind(N) ≡ s, ind(N+1) ≡ t (mod n)}, counted directly in one
pass, by a naive oracle, or from Jacobi sums through
576·C₂₄(s,t) = Σ_u Σ_v (−1)^(uf) β^(−su−tv) J(u,v).
"""

# Standard library imports
import logging
from dataclasses import dataclass, field

# Third-party imports
import numpy as np

# Local imports
from ..errors import InvariantViolation, NotOneModN
from ..field import PrimeContext
from ..ring.cycloint import ORDER, CycloInt, jacobi_exponent_counts

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CycMatrix:
    """n×n cyclotomic numbers of one prime"""

    n: int
    counts: np.ndarray = field(repr=False)

    def __getitem__(self, st):
        s, t = st
        return int(self.counts[s % self.n, t % self.n])

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def to_list(self) -> list[list[int]]:
        return self.counts.tolist()

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.counts, other.counts)


def _check_divides(ctx: PrimeContext, n: int):
    if n < 1 or (ctx.p - 1) % n:
        raise NotOneModN(ctx.p, n)


def count_all(ctx: PrimeContext, n: int | None = None) -> CycMatrix:
    """Single pass over N = 1..p−2; N = p−1 is excluded since N+1 ≡ 0"""
    n = ctx.n if n is None else n
    _check_divides(ctx, n)
    p = ctx.p
    lo = ctx.ind[1 : p - 1] % n
    hi = ctx.ind[2:p] % n
    counts = np.bincount(lo * n + hi, minlength=n * n).reshape(n, n)
    return CycMatrix(n=n, counts=counts.astype(np.int64))


def naive_count(ctx: PrimeContext, n: int | None = None) -> CycMatrix:
    """Independent oracle: for each (s,t), scan every N. O(n²·p), small primes only."""
    n = ctx.n if n is None else n
    _check_divides(ctx, n)
    p, g = ctx.p, ctx.g
    # residues by brute exponentiation, not through the index table
    power_of = {}
    acc = 1
    for e in range(p - 1):
        power_of[acc] = e
        acc = acc * g % p
    counts = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        for t in range(n):
            total = 0
            for N in range(1, p):
                if (N + 1) % p == 0:
                    continue
                if power_of[N] % n == s and power_of[(N + 1) % p] % n == t:
                    total += 1
            counts[s, t] = total
    return CycMatrix(n=n, counts=counts)


def cyclotomic_from_jacobi(ctx: PrimeContext) -> np.ndarray:
    """576·C₂₄(s,t) for all (s,t), evaluated exactly from the 576 Jacobi sums"""
    if (ctx.p - 1) % ORDER:
        raise NotOneModN(ctx.p, ORDER)
    f = (ctx.p - 1) // ORDER
    # E[u, v, k]: exponent-class histogram of J(u,v)
    E = np.empty((ORDER, ORDER, ORDER), dtype=np.int64)
    for u in range(ORDER):
        for v in range(ORDER):
            E[u, v] = jacobi_exponent_counts(ctx, u, v)
    sign = np.where((np.arange(ORDER) * f) % 2 == 1, -1, 1).astype(np.int64)
    E *= sign[:, None, None]

    u_idx = np.arange(ORDER)[:, None, None]
    v_idx = np.arange(ORDER)[None, :, None]
    k_idx = np.arange(ORDER)[None, None, :]
    weights = E.reshape(-1)

    result = np.zeros((ORDER, ORDER), dtype=object)
    for s in range(ORDER):
        for t in range(ORDER):
            exps = ((k_idx - s * u_idx - t * v_idx) % ORDER).reshape(-1)
            classes = np.bincount(exps, weights=weights, minlength=ORDER)
            value = CycloInt.from_exponent_counts([int(round(x)) for x in classes])
            if not value.is_rational:
                raise InvariantViolation(f"576·C(s,t) from Jacobi sums is not rational at ({s},{t})", p=ctx.p)
            result[s, t] = value.c[0]
    return result
