"""
Prime-field contexts
A PrimeContext pins a prime p ≡ 1 (mod n), a primitive root g and the full
index table ind: x ↦ ind(x) with g^ind(x) ≡ x (mod p).
"""

# Standard library imports
import logging
import math
from dataclasses import dataclass, field

# Third-party imports
import numpy as np
import sympy
from sympy.ntheory import is_primitive_root as _sympy_is_primitive_root
from sympy.ntheory import primitive_root as _sympy_primitive_root

# Local imports
from ..errors import NotOneModN, NotPrime, NotPrimitive, ZeroElement

logger = logging.getLogger(__name__)

# ind[0] holds this sentinel; 0 has no index
NO_INDEX = -1


def is_prime(u: int) -> bool:
    """Deterministic primality (sympy's test is exact below 2^64)"""
    return bool(sympy.isprime(u))


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return bool(_sympy_is_primitive_root(g, p))


def find_primitive_root(p: int) -> int:
    """Least primitive root modulo the prime p"""
    if not is_prime(p):
        raise NotPrime(p)
    if p == 2:
        return 1
    return int(_sympy_primitive_root(p))


def _power_sweep(p: int, g: int) -> np.ndarray:
    """g^0, g^1, ..., g^(p-2) mod p as one vectorized sweep.

    Baby steps g^0..g^(b-1) times giant steps g^(b·j); every product stays
    below p² and fits in int64 for the primes in scope.
    """
    order = p - 1
    block = max(1, math.isqrt(order))
    baby = np.empty(block, dtype=np.int64)
    acc = 1
    for i in range(block):
        baby[i] = acc
        acc = acc * g % p
    n_giant = -(-order // block)
    giant = np.empty(n_giant, dtype=np.int64)
    step = pow(g, block, p)
    acc = 1
    for j in range(n_giant):
        giant[j] = acc
        acc = acc * step % p
    powers = (giant[:, None] * baby[None, :]) % p
    return powers.reshape(-1)[:order]


@dataclass(frozen=True, eq=False)
class PrimeContext:
    """Prime field F_p with a fixed primitive root and its index table"""

    p: int
    n: int
    g: int
    ind: np.ndarray = field(repr=False)

    @property
    def f(self) -> int:
        return (self.p - 1) // self.n

    def index(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroElement(x, self.p)
        return int(self.ind[x])

    def residue_class(self, x: int, m: int) -> int:
        return residue_class(self, x, m)

    def __repr__(self):
        return f"<PrimeContext p={self.p} n={self.n} g={self.g}>"


def _check_order(p: int, n: int):
    if n < 2 or not is_prime(p) or (p - 1) % n != 0:
        raise NotOneModN(p, n)


def build_context(p: int, n: int, g: int, ind: np.ndarray | None = None) -> PrimeContext:
    """Build the context, sweeping the powers of g once (or adopting a cached table)"""
    _check_order(p, n)
    if not is_primitive_root(g, p):
        raise NotPrimitive(g, p)

    if ind is None:
        powers = _power_sweep(p, g)
        ind = np.full(p, NO_INDEX, dtype=np.int64)
        ind[powers] = np.arange(p - 1, dtype=np.int64)
    else:
        ind = np.asarray(ind, dtype=np.int64)

    if ind.shape != (p,) or int(ind[1]) != 0 or int(ind[g % p]) != 1:
        raise NotPrimitive(g, p)
    ind.setflags(write=False)

    logger.debug(f"Index table built: p={p}, n={n}, g={g}")
    return PrimeContext(p=p, n=n, g=g, ind=ind)


def rebase(ctx: PrimeContext, g: int) -> PrimeContext:
    """Same field, another primitive root: ind_g(x) = ind(x) · ind(g)⁻¹ mod (p−1)"""
    p = ctx.p
    if not is_primitive_root(g, p):
        raise NotPrimitive(g, p)
    k = int(ctx.ind[g % p])
    k_inv = pow(k, -1, p - 1)
    ind = (ctx.ind * k_inv) % (p - 1)
    ind[0] = NO_INDEX
    ind.setflags(write=False)
    return PrimeContext(p=p, n=ctx.n, g=g, ind=ind)


def residue_class(ctx: PrimeContext, x: int, m: int) -> int:
    """ind(x) mod m; x is an m-th power residue iff the result is 0"""
    return ctx.index(x) % m


def load_or_build(p: int, n: int, g: int, cache=None) -> PrimeContext:
    """build_context backed by the on-disk index cache when one is configured"""
    if cache is not None and cache.enabled:
        ind = cache.load_index(p, g)
        if ind is not None:
            return build_context(p, n, g, ind=ind)
        ctx = build_context(p, n, g)
        cache.save_index(p, g, ctx.ind)
        return ctx
    return build_context(p, n, g)
