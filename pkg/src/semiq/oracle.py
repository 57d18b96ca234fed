"""Brute-force reference computations.

Nothing here touches the Apéry round-robin or the min-coins table; the
only tools are a membership bitmap and exhaustive search, so agreement
with the production paths is evidence rather than tautology.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import GeneratorList, InvariantPair, as_generators

__all__ = [
    "DEFAULT_MEMORY_CAP",
    "SemigroupSieve",
    "build_sieve",
    "brute_invariants",
    "brute_quotient_invariants",
    "brute_ob",
]

DEFAULT_MEMORY_CAP = 10**8


def memory_cap() -> int:
    """Sieve size cap in bits; ``SEMIQ_MEMORY_CAP`` overrides the default."""
    raw = os.environ.get("SEMIQ_MEMORY_CAP")
    return int(raw) if raw else DEFAULT_MEMORY_CAP


@dataclass(frozen=True, eq=False)
class SemigroupSieve:
    bound: int
    bits: np.ndarray  # bool, length bound + 1

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            raise IndexError(f"{x} is beyond the sieve bound {self.bound}")
        return bool(self.bits[x])

    def gaps(self) -> np.ndarray:
        return np.flatnonzero(~self.bits)


def auto_bound(A: GeneratorList) -> int:
    # Schur: F(A) <= (a_1 - 1)(a_n - 1) - 1, so every gap lies below this
    return (A.gens[0] - 1) * (A.gens[-1] - 1) + A.gens[-1]


def build_sieve(A, L: Optional[int] = None, cap: Optional[int] = None) -> SemigroupSieve:
    """Membership bitmap of ``<A>`` on ``0..L``.

    Built as a Python integer bitset: closing under ``+g`` takes
    ``log2(L/g)`` shift-or steps (``S |= S << g``, then ``<< 2g``, ...).
    """
    A = as_generators(A)
    if L is None:
        L = auto_bound(A)
    elif L < A.gens[-1]:
        raise ValueError(f"bound {L} is below the largest generator {A.gens[-1]}")
    cap = memory_cap() if cap is None else cap
    if L + 1 > cap:
        raise OverflowError(f"sieve of {L + 1} bits exceeds the memory cap of {cap} bits")
    mask = (1 << (L + 1)) - 1
    bits = 1
    for g in A.gens:
        shift = g
        while shift <= L:
            bits = (bits | (bits << shift)) & mask
            shift *= 2
    raw = np.frombuffer(bits.to_bytes((L + 8) // 8, "little"), dtype=np.uint8)
    arr = np.unpackbits(raw, bitorder="little")[: L + 1].astype(bool)
    return SemigroupSieve(L, arr)


def _from_gap_flags(is_gap: np.ndarray) -> InvariantPair:
    idx = np.flatnonzero(is_gap)
    if idx.size == 0:
        return InvariantPair(-1, 0)
    return InvariantPair(int(idx[-1]), int(idx.size))


def brute_invariants(A) -> InvariantPair:
    return _from_gap_flags(~build_sieve(A).bits)


def brute_quotient_invariants(A, p: int, sieve: Optional[SemigroupSieve] = None) -> InvariantPair:
    """Invariants of ``{x >= 0 : p*x in <A>}`` by reading every ``p``-th sieve bit.

    Works for any ``p >= 1``, divisor of a generator or not.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if sieve is None:
        sieve = build_sieve(A)
    # x > bound // p gives p*x > bound > F(A)
    return _from_gap_flags(~sieve.bits[::p])


def brute_ob(B: Sequence[int], M: int) -> Optional[int]:
    """Fewest parts from ``B`` summing to ``M`` by exhaustive branch-and-bound; ``None`` if none."""
    coins = sorted(set(B), reverse=True)
    if M < 0 or not coins or coins[-1] < 1:
        raise ValueError("need M >= 0 and positive parts")
    # suffix_gcd[i] divides every sum made from coins[i:]
    suffix_gcd = [0] * (len(coins) + 1)
    for i in range(len(coins) - 1, -1, -1):
        suffix_gcd[i] = math.gcd(coins[i], suffix_gcd[i + 1])
    best = [None]

    def search(i, rem, used):
        if rem == 0:
            if best[0] is None or used < best[0]:
                best[0] = used
            return
        if i == len(coins) or rem % suffix_gcd[i]:
            return
        c = coins[i]
        if best[0] is not None and used + -(-rem // c) >= best[0]:
            return
        for x in range(rem // c, -1, -1):
            search(i + 1, rem - x * c, used + x)

    search(0, M, 0)
    return best[0]
