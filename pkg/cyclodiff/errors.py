"""
Exception hierarchy
Every error raised by the library carries the exit code the CLI reports.
"""


class CyclodiffError(Exception):
    """Base error"""

    exit_code = 3


class InputError(CyclodiffError):
    """Bad input: a prime, order, class or file the caller supplied"""

    exit_code = 2


class InvariantError(CyclodiffError):
    """An internal identity failed; always a bug or a wrong assumption"""

    exit_code = 3


# fieldctx


class NotPrime(InputError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class NotOneModN(InputError):
    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        super().__init__(f"{p} is not a prime ≡ 1 (mod {n})")


class NotPrimitive(InputError):
    def __init__(self, g: int, p: int):
        self.g = g
        self.p = p
        super().__init__(f"{g} is not a primitive root modulo {p}")


class ZeroElement(InputError):
    def __init__(self, x: int, p: int):
        self.x = x
        self.p = p
        super().__init__(f"{x} ≡ 0 (mod {p}) has no index")


# paramext


class NoAdmissibleGenerator(InvariantError):
    def __init__(self, p: int, pinned: int | None = None):
        self.p = p
        self.pinned = pinned
        detail = f" (pinned generator {pinned})" if pinned is not None else ""
        super().__init__(
            f"No primitive root of {p} gives ind(2) mod 12 in {{0,2,4,6}} "
            f"and ind(3) mod 8 in {{0,2,4}}{detail}"
        )


class NotInSpan(InvariantError):
    def __init__(self, value, basis_name: str):
        self.value = value
        self.basis_name = basis_name
        super().__init__(f"{value} is not in the integer span of {basis_name}")


class InvariantViolation(InvariantError):
    def __init__(self, identity: str, p: int | None = None):
        self.identity = identity
        self.p = p
        where = f" at p={p}" if p is not None else ""
        super().__init__(f"Invariant violated{where}: {identity}")


# cycnum


class ClassMismatch(InputError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"Class mismatch: expected {expected}, got {got}")


class RankDeficient(InputError):
    def __init__(self, rank: int, count: int, klass=None):
        self.rank = rank
        self.count = count
        self.klass = klass
        where = f" for class {klass}" if klass is not None else ""
        super().__init__(
            f"Observation matrix has rank {rank} < 18 from {count} fitting primes{where}"
        )


class NonIntegralCoefficient(InvariantError):
    def __init__(self, s: int, t: int, value):
        self.s = s
        self.t = t
        self.value = value
        super().__init__(f"Row ({s},{t}) fitted a non-integral coefficient {value}")


class ValidationFailure(InvariantError):
    def __init__(self, p: int, s: int, t: int):
        self.p = p
        self.s = s
        self.t = t
        super().__init__(f"Held-out prime {p} disagrees with row ({s},{t})")


class NonZeroOmitted(InputError):
    def __init__(self, s: int, t: int, names):
        self.s = s
        self.t = t
        self.names = tuple(names)
        super().__init__(
            f"Row ({s},{t}) has nonzero coefficients on omitted parameters {', '.join(self.names)}"
        )


class MissingTable(InputError):
    def __init__(self, detail: str):
        super().__init__(f"Missing coefficient table: {detail}")


# exactla


class DimensionMismatch(InputError):
    def __init__(self, detail: str):
        super().__init__(f"Dimension mismatch: {detail}")


class UnknownVariable(InputError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown variable {name!r}")


# nonexist


class StructureViolation(InvariantError):
    def __init__(self, detail: str):
        super().__init__(f"System structure violated: {detail}")


# resources


class MemoryBudgetExceeded(InputError):
    def __init__(self, p: int, projected_mb: float, max_memory_mb: int):
        self.p = p
        self.projected_mb = projected_mb
        self.max_memory_mb = max_memory_mb
        super().__init__(
            f"Index table for p={p} projects {projected_mb:.1f}MB of a {max_memory_mb}MB budget; "
            f"lower the prime bound or raise CYCLODIFF_MAX_MEMORY_MB"
        )
