"""
Prime harvesting
Scans primes p ≡ 1 (mod 24) in increasing order, normalizes each generator,
extracts parameters and counts cyclotomic numbers, grouping the observations
by class tuple.
"""

# Standard library imports
import logging
import multiprocessing
import time
from functools import partial
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional

# Third-party imports
import numpy as np
import sympy
from tqdm import tqdm

# Local imports
from ..ring.cycloint import ORDER
from ..ring.params import ClassTuple, JacobiParams, all_classes, extract_params, normalize_generator
from ..utils.memory_monitor import memory_monitor
from .counting import count_all

logger = logging.getLogger(__name__)

FIRST_PRIME = 73


@dataclass(frozen=True, eq=False)
class Observation:
    """One prime's parameters and its 576·C₂₄ matrix"""

    p: int
    g: int
    params: JacobiParams
    scaled: np.ndarray = field(repr=False)

    @property
    def klass(self) -> ClassTuple:
        return self.params.klass

    @property
    def f(self) -> int:
        return (self.p - 1) // ORDER


def observe(p: int, cache=None) -> Observation:
    ctx = normalize_generator(p, cache=cache)
    params = extract_params(ctx)
    counts = count_all(ctx, ORDER)
    return Observation(p=p, g=ctx.g, params=params, scaled=counts.counts * (ORDER * ORDER))


def primes_one_mod_24(pmax: int, start: int = FIRST_PRIME) -> Iterator[int]:
    for p in sympy.sieve.primerange(start, pmax + 1):
        if p % ORDER == 1:
            yield int(p)


def make_executor(jobs: int):
    ctx = multiprocessing.get_context("fork")
    return ProcessPoolExecutor(max_workers=jobs, mp_context=ctx)


def within_budget(primes: Iterable[int]) -> Iterator[int]:
    """Primes whose index tables fit the memory budget; raises at the first that does not"""
    for p in primes:
        memory_monitor.require_prime_budget(p)
        yield p


def observe_many(
    primes: Iterable[int], jobs: int = 1, chunk: int = 64, cache=None
) -> Iterator[Observation]:
    """Observations in prime order, computed in parallel chunks when jobs > 1"""
    work = partial(observe, cache=cache)
    primes = within_budget(primes)
    if jobs <= 1:
        for p in primes:
            yield work(p)
        return
    batch: List[int] = []
    with make_executor(jobs) as executor:
        for p in primes:
            batch.append(p)
            if len(batch) == chunk:
                yield from executor.map(work, batch)
                batch = []
        if batch:
            yield from executor.map(work, batch)


def harvest(
    pmax: int,
    per_class: int,
    classes: Optional[Iterable[ClassTuple]] = None,
    jobs: int = 1,
    progress: bool = False,
    cache=None,
) -> Dict[ClassTuple, List[Observation]]:
    """Up to per_class observations per requested class, smallest primes first.

    Stops as soon as every requested class is full or pmax is reached.
    """
    wanted = list(classes) if classes is not None else all_classes()
    buckets: Dict[ClassTuple, List[Observation]] = {k: [] for k in wanted}
    open_classes = set(wanted)
    parity = {k.F1 for k in wanted}

    primes = (p for p in primes_one_mod_24(pmax) if ((p - 1) // ORDER) % 2 in parity)
    started = time.perf_counter()
    scanned = 0
    with tqdm(desc="Harvesting primes", unit="p", disable=not progress) as bar:
        for obs in observe_many(primes, jobs=jobs, cache=cache):
            scanned += 1
            bar.update(1)
            bucket = buckets.get(obs.klass)
            if bucket is not None and len(bucket) < per_class:
                bucket.append(obs)
                if len(bucket) == per_class:
                    open_classes.discard(obs.klass)
                    logger.debug(f"Class {obs.klass} filled at p={obs.p}")
            if scanned % 500 == 0:
                memory_monitor.log_memory_usage(f"harvest p={obs.p}")
            if not open_classes:
                break

    elapsed = time.perf_counter() - started
    logger.info(
        f"Harvested {scanned} primes below {pmax} in {elapsed:.1f}s; "
        f"{len(wanted) - len(open_classes)}/{len(wanted)} classes filled"
    )
    for k in sorted(open_classes):
        logger.warning(f"Class {k} has only {len(buckets[k])} primes below {pmax}")
    return buckets


@dataclass(frozen=True)
class CensusEntry:
    klass: ClassTuple
    count: int
    least_prime: Optional[int]


def class_census(pmax: int, jobs: int = 1, progress: bool = False, cache=None) -> List[CensusEntry]:
    """How many primes below pmax fall in each of the 48 classes, and the least one"""
    counts: Dict[ClassTuple, int] = {k: 0 for k in all_classes()}
    least: Dict[ClassTuple, int] = {}
    with tqdm(desc="Classifying primes", unit="p", disable=not progress) as bar:
        for obs in observe_many(primes_one_mod_24(pmax), jobs=jobs, cache=cache):
            bar.update(1)
            counts[obs.klass] += 1
            least.setdefault(obs.klass, obs.p)
    entries = [CensusEntry(k, counts[k], least.get(k)) for k in all_classes()]
    for entry in entries:
        if entry.least_prime is None:
            logger.warning(f"No prime below {pmax} realizes class {entry.klass}")
    return entries
