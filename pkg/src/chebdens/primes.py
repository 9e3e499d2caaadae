"""Enumeration of rational primes with a segmented sieve of Eratosthenes.

All ranges are half-open ``[lo, hi)`` and all outputs are strictly
increasing.  The sieve is segmented so that memory stays proportional to
``segment_size`` regardless of ``hi``, and segments are merged in ascending
order, so the output is identical however the segments are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import ResourceLimitError

#: Refuse to sieve past this bound unless the caller overrides ``hard_cap``.
HARD_CAP = 2**40

#: Default segment length; a full pass to 10^7 takes well under a second.
DEFAULT_SEGMENT_SIZE = 1 << 21

# Witnesses making Miller-Rabin deterministic below ~3.3e24 (far beyond HARD_CAP).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


@dataclass(frozen=True)
class PrimeRange:
    """Half-open prime search range ``[lo, hi)`` with a sieve tuning knob."""

    lo: int
    hi: int
    segment_size: int = DEFAULT_SEGMENT_SIZE

    def __post_init__(self) -> None:
        if self.lo < 2:
            raise ValueError(f"lo must be >= 2, got {self.lo}")
        if self.segment_size < 1:
            raise ValueError("segment_size must be positive")

    def is_empty(self) -> bool:
        return self.hi <= self.lo


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit by a plain sieve (used for base primes)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _check_cap(rng: PrimeRange, hard_cap: int) -> None:
    if rng.hi > hard_cap:
        raise ResourceLimitError(
            f"hi={rng.hi} exceeds the configured cap {hard_cap}; "
            "pass hard_cap explicitly to allow larger ranges"
        )


def iter_prime_segments(rng: PrimeRange, hard_cap: int = HARD_CAP) -> Iterator[np.ndarray]:
    """Yield the primes of ``rng`` one ascending segment at a time.

    Each segment is sieved independently against the base primes up to
    sqrt(hi); concatenating the yields equals a single-shot sieve of the
    whole range.
    """
    _check_cap(rng, hard_cap)
    if rng.is_empty():
        return
    base = _simple_sieve(math.isqrt(rng.hi - 1))
    lo = rng.lo
    while lo < rng.hi:
        end = min(lo + rng.segment_size, rng.hi)
        mask = np.ones(end - lo, dtype=bool)
        for p in base.tolist():
            if p * p >= end:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < end:
                mask[start - lo :: p] = False
        seg = np.flatnonzero(mask)
        if seg.size:
            yield (seg + lo).astype(np.int64)
        lo = end


def sieve_primes(rng: PrimeRange, hard_cap: int = HARD_CAP) -> np.ndarray:
    """All primes in ``[rng.lo, rng.hi)`` in increasing order.

    An empty range (``hi <= lo``) yields an empty array rather than an error.
    """
    segments = list(iter_prime_segments(rng, hard_cap=hard_cap))
    if not segments:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(segments)


def prime_count(rng: PrimeRange, hard_cap: int = HARD_CAP) -> int:
    """Number of primes in ``[rng.lo, rng.hi)``; equals len(sieve_primes(rng))."""
    return sum(seg.size for seg in iter_prime_segments(rng, hard_cap=hard_cap))


@lru_cache(maxsize=8)
def primes_upto(hi: int) -> np.ndarray:
    """Cached primes below ``hi`` as a read-only array (shared, do not mutate)."""
    arr = sieve_primes(PrimeRange(2, hi))
    arr.setflags(write=False)
    return arr


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality check.

    The fixed witness set is proven exhaustive for n < 3.3e24; larger inputs
    are rejected rather than answered probabilistically.
    """
    if n >= _MR_LIMIT:
        raise ResourceLimitError(f"deterministic witness set only covers n < {_MR_LIMIT}")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
