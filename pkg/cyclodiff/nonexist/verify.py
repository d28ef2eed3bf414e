"""
Direct checks on real primes
Brute-force difference-list verification of H_{n,ε} and the direct test of
the cyclotomic criterion on counted numbers.
"""

from __future__ import annotations

# Standard library imports
import logging
import time
from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterator, List, Optional

# Third-party imports
import numpy as np
from tqdm import tqdm

# Local imports
from ..cyclotomy.counting import count_all
from ..cyclotomy.harvest import FIRST_PRIME, make_executor, primes_one_mod_24
from ..errors import InputError, InvariantViolation, NoAdmissibleGenerator, NotOneModN, ZeroElement
from ..field import PrimeContext, find_primitive_root, is_prime, load_or_build, rebase
from ..ring.cycloint import ORDER
from ..ring.params import admissible_generators
from ..utils.memory_monitor import memory_monitor
from .systems import SYSTEM_ROWS, Mode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DSReport:
    p: int
    n: int
    epsilon: int
    m: int
    is_set: bool
    lambda_: Optional[int]

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "n": self.n,
            "epsilon": self.epsilon,
            "m": self.m,
            "is_set": self.is_set,
            "lambda": self.lambda_,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> DSReport:
        return cls(
            p=int(data["p"]),
            n=int(data["n"]),
            epsilon=int(data["epsilon"]),
            m=int(data["m"]),
            is_set=bool(data["is_set"]),
            lambda_=None if data.get("lambda") is None else int(data["lambda"]),
        )


def power_residues(p: int, n: int, epsilon: int = 0) -> np.ndarray:
    """H_n, with 0 adjoined when ε = 1"""
    if n < 2 or not is_prime(p) or (p - 1) % n:
        raise NotOneModN(p, n)
    if epsilon not in (0, 1):
        raise InputError(f"epsilon must be 0 or 1, got {epsilon}")
    ctx = load_or_build(p, n, find_primitive_root(p))
    residues = np.flatnonzero(ctx.ind % n == 0)
    residues = residues[residues != 0]
    if epsilon:
        residues = np.concatenate(([0], residues))
    return residues.astype(np.int64)


def verify_addition_set(p: int, n: int, epsilon: int, m: int) -> DSReport:
    """Count the differences s − m·t over all ordered pairs of H_{n,ε}, s = t
    included, and report whether F_p^* is covered a constant number of times"""
    if m % p == 0:
        raise ZeroElement(m, p)
    S = power_residues(p, n, epsilon)
    diffs = (S[:, None] - (m % p) * S[None, :]) % p
    hits = np.bincount(diffs.reshape(-1), minlength=p)[1:]
    lam = int(hits[0])
    is_set = lam > 0 and bool(np.all(hits == lam))
    logger.debug(f"H_({n},{epsilon}) mod {p} with m={m}: multiplicities {int(hits.min())}..{int(hits.max())}")
    return DSReport(p=p, n=n, epsilon=epsilon, m=m, is_set=is_set, lambda_=lam if is_set else None)


# Direct criterion scan


@dataclass(frozen=True)
class ScanResult:
    """Per-prime outcome; survivors lists the ε values meeting the criterion"""

    p: int
    g: int
    survivors: tuple[int, ...]
    seconds: float


def cross_check_generators(ctx: PrimeContext) -> tuple[int, int]:
    """The two least admissible generators of ctx.p"""
    pair = tuple(islice(admissible_generators(ctx), 2))
    if len(pair) < 2:
        raise NoAdmissibleGenerator(ctx.p)
    return pair


def _criterion_hits(scaled: np.ndarray, p: int, mode: Mode) -> tuple[int, ...]:
    counted = scaled[list(SYSTEM_ROWS), mode.column] - p
    return tuple(eps for eps in (0, 1) if bool(np.all(counted == mode.criterion_offset(eps))))


def scan_prime(p: int, mode: Mode, cross_check: bool = False) -> ScanResult:
    started = time.perf_counter()
    ctx = load_or_build(p, ORDER, find_primitive_root(p))
    scaled = count_all(ctx).counts * (ORDER * ORDER)
    hits = _criterion_hits(scaled, p, mode)
    if cross_check:
        for g in cross_check_generators(ctx):
            other_hits = _criterion_hits(count_all(rebase(ctx, g)).counts * (ORDER * ORDER), p, mode)
            if other_hits != hits:
                raise InvariantViolation(
                    f"criterion verdict depends on the generator ({ctx.g}: {hits}, {g}: {other_hits})",
                    p=p,
                )
    return ScanResult(p=p, g=ctx.g, survivors=hits, seconds=time.perf_counter() - started)


def _scan_job(job) -> ScanResult:
    return scan_prime(*job)


def iter_scan(pmax: int, mode: Mode, jobs: int = 1, cross_check: bool = False) -> Iterator[ScanResult]:
    primes = [p for p in primes_one_mod_24(pmax, FIRST_PRIME) if ((p - 1) // ORDER) % 2 == mode.parity]
    if primes:
        memory_monitor.require_prime_budget(primes[-1])
    work = [(p, mode, cross_check) for p in primes]
    if jobs <= 1:
        for job in work:
            yield _scan_job(job)
        return
    with make_executor(jobs) as executor:
        yield from executor.map(_scan_job, work, chunksize=16)


def direct_criterion_scan(
    pmax: int,
    mode: Mode,
    jobs: int = 1,
    cross_check: bool = False,
    progress: bool = False,
) -> list[tuple[int, int]]:
    """(p, ε) pairs, p ≤ pmax, whose counted cyclotomic numbers meet the
    difference-set (f odd) or qualified (f even) criterion for s = 1..11"""
    survivors: List[tuple[int, int]] = []
    scanned = 0
    started = time.perf_counter()
    for result in tqdm(
        iter_scan(pmax, mode, jobs, cross_check), desc=f"Scanning ({mode.value})", unit="p", disable=not progress
    ):
        scanned += 1
        logger.debug(f"p={result.p} g={result.g}: {result.seconds * 1000:.1f} ms")
        for eps in result.survivors:
            logger.warning(f"p={result.p} meets the {mode.value} criterion at ε={eps}")
            survivors.append((result.p, eps))
        if scanned % 1000 == 0:
            memory_monitor.log_memory_usage(f"scan p={result.p}")
    logger.info(
        f"Scanned {scanned} primes up to {pmax} ({mode.value}) in {time.perf_counter() - started:.1f}s; "
        f"{len(survivors)} survivors"
    )
    return survivors

