"""Generator sets, membership and Apéry sets of numerical semigroups.

The Frobenius number and genus are read off the Apéry set of any element
``a`` of the semigroup:

    F = max(N_r) - a
    g = sum(N_r) / a - (a - 1) / 2

where ``N_r`` is the least semigroup element congruent to ``r`` mod ``a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    EmptyInput,
    GcdNotOne,
    NonIntegerResult,
    NonPositiveEntry,
    NotAGenerator,
    NotCoprime,
)

__all__ = [
    "GeneratorList",
    "AperyTable",
    "InvariantPair",
    "validate_generators",
    "is_member",
    "apery_set",
    "frobenius_from_apery",
    "genus_from_apery",
    "invariants",
    "sylvester_two",
]


@dataclass(frozen=True)
class InvariantPair:
    frobenius: int
    genus: int

    def __post_init__(self):
        if self.frobenius < -1 or self.genus < 0:
            raise ValueError(f"invalid invariants {self}")
        if (self.frobenius == -1) != (self.genus == 0):
            raise ValueError(f"frobenius is -1 exactly when genus is 0, got {self}")

    def __iter__(self):
        return iter((self.frobenius, self.genus))


@dataclass(frozen=True)
class AperyTable:
    """Least element of each residue class mod ``modulus``.

    ``entries[r]`` is ``N_r``.  Only the cheap structural invariants are
    checked here; membership of the entries is checked by the test suite
    against the sieve oracle.
    """

    modulus: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.modulus < 1 or len(self.entries) != self.modulus:
            raise ValueError("table must have exactly `modulus` entries")
        if self.entries[0] != 0:
            raise ValueError("entries[0] must be 0")
        for r, n in enumerate(self.entries):
            if n < 0 or n % self.modulus != r:
                raise ValueError(f"entries[{r}] = {n} is not congruent to {r} mod {self.modulus}")

    def __len__(self):
        return self.modulus

    def __getitem__(self, r):
        return self.entries[r]

    def contains(self, x: int) -> bool:
        """Membership in the semigroup this table describes."""
        return x >= 0 and x >= self.entries[x % self.modulus]


@dataclass(frozen=True)
class GeneratorList:
    """A sorted, duplicate-free generating set with gcd 1.

    Redundant generators are kept as given.  Build through
    :func:`validate_generators` unless the input is already canonical.
    """

    gens: Tuple[int, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise EmptyInput("generator list is empty")
        for g in gens:
            if g < 1:
                raise NonPositiveEntry(g)
        if any(x >= y for x, y in zip(gens, gens[1:])):
            raise ValueError("generators must be strictly increasing; use validate_generators")
        g = reduce(math.gcd, gens)
        if g != 1:
            raise GcdNotOne(g)
        object.__setattr__(self, "gens", gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __str__(self):
        return ",".join(map(str, self.gens))

    @cached_property
    def apery(self) -> AperyTable:
        """Apéry table with respect to the smallest generator (cached)."""
        return apery_set(self, self.gens[0])


def validate_generators(raw: Iterable[int]) -> GeneratorList:
    """Sort and deduplicate ``raw``; reject empty input, non-positive entries and gcd > 1."""
    values = [int(x) for x in raw]
    if not values:
        raise EmptyInput("generator list is empty")
    for v in values:
        if v < 1:
            raise NonPositiveEntry(v)
    return GeneratorList(tuple(sorted(set(values))))


def is_member(A: GeneratorList, x: int) -> bool:
    return A.apery.contains(x)


def apery_set(A: GeneratorList, a: Optional[int] = None) -> AperyTable:
    """Apéry table of ``<A>`` with respect to the generator ``a``.

    Round-robin shortest paths over the residues mod ``a``: for each
    generator the residue graph splits into ``gcd(a, g)`` cycles, and one
    walk around each cycle starting from its current minimum settles it.
    Passes over all generators repeat until one changes nothing.
    """
    if a is None:
        a = A.gens[0]
    if a not in A.gens:
        raise NotAGenerator(a, A.gens)
    table: list = [None] * a
    table[0] = 0
    others = [g for g in A.gens if g != a]
    changed = True
    while changed:
        changed = False
        for g in others:
            step = g % a
            c = math.gcd(a, g)
            cycle_len = a // c
            for start in range(c):
                # the cycle through `start` is {start, start+c, ...} as a set
                best = None
                for q in range(start, a, c):
                    n = table[q]
                    if n is not None and (best is None or n < best):
                        best = n
                if best is None:
                    continue
                n = best
                r = n % a
                for _ in range(cycle_len - 1):
                    n += g
                    r = (r + step) % a
                    cur = table[r]
                    if cur is None or n < cur:
                        table[r] = n
                        changed = True
                    else:
                        n = cur
    if any(n is None for n in table):
        raise AssertionError("unreachable residue; gcd check should have prevented this")
    return AperyTable(a, tuple(table))


def frobenius_from_apery(t: AperyTable) -> int:
    return max(t.entries) - t.modulus


def genus_from_apery(t: AperyTable) -> int:
    a = t.modulus
    num = 2 * sum(t.entries) - a * (a - 1)
    g, rem = divmod(num, 2 * a)
    if rem:
        raise NonIntegerResult(f"genus {num}/{2 * a} is not an integer; corrupted Apéry table")
    return g


def invariants(t: AperyTable) -> InvariantPair:
    return InvariantPair(frobenius_from_apery(t), genus_from_apery(t))


def sylvester_two(a1: int, a2: int) -> InvariantPair:
    """Closed forms ``a1*a2 - a1 - a2`` and ``(a1-1)(a2-1)/2`` for two coprime generators."""
    if a1 < 1 or a2 < 1:
        raise NonPositiveEntry(min(a1, a2))
    if math.gcd(a1, a2) != 1:
        raise NotCoprime(a1, a2)
    return InvariantPair(a1 * a2 - a1 - a2, (a1 - 1) * (a2 - 1) // 2)


def as_generators(A) -> GeneratorList:
    if isinstance(A, GeneratorList):
        return A
    return validate_generators(A)


def gcd_all(values: Sequence[int]) -> int:
    return reduce(math.gcd, values, 0)
