"""Quotients ``<A>/p = {x >= 0 : p*x in <A>}`` and their Apéry tables.

When ``p`` divides a generator ``a`` the quotient contains ``a/p`` and its
Apéry table with respect to ``a/p`` can be computed two ways:

* by scanning each residue class upward with the membership test
  (:func:`quotient_apery`), valid for any generators;
* for generators of the form ``(a, h*a + d*b_1, ..., h*a + d*b_k)``, by
  minimising over ``m >= 0``

      O_B(m*a + r*p) * (h*a/p) + (m*a/p + r) * d

  where ``O_B(M)`` is the least number of parts in a representation of
  ``M`` by ``B`` (:func:`n_drp`).  The value is the Apéry entry of the
  residue ``d*r mod a/p``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .core import (
    AperyTable,
    GeneratorList,
    InvariantPair,
    as_generators,
    frobenius_from_apery,
    gcd_all,
    genus_from_apery,
    is_member,
)
from .errors import (
    DivisorMismatch,
    GcdNotOne,
    InternalBoundError,
    NonPositiveEntry,
    NotAGenerator,
    NotCoprime,
    ValidationError,
)

__all__ = [
    "QuotientSpec",
    "StructuredFamily",
    "OBTable",
    "quotient_member",
    "ob_solve",
    "ob_witness",
    "n_drp",
    "n_drp_table",
    "quotient_apery",
    "quotient_invariants",
    "two_gen_quotient",
    "structured_form",
]


@dataclass(frozen=True)
class QuotientSpec:
    """``<base>/p``.

    ``a`` selects the generator used as Apéry modulus (``a/p``); it
    defaults to the smallest generator.  Any generator divisible by ``p``
    gives the same invariants.
    """

    base: GeneratorList
    p: int
    a: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "base", as_generators(self.base))
        if self.p < 1:
            raise NonPositiveEntry(self.p)
        if self.a is not None and self.a not in self.base.gens:
            raise NotAGenerator(self.a, self.base.gens)

    @property
    def generator(self) -> int:
        return self.base.gens[0] if self.a is None else self.a

    @property
    def modulus(self) -> int:
        a = self.generator
        if a % self.p:
            raise DivisorMismatch(self.p, a)
        return a // self.p


@dataclass(frozen=True)
class StructuredFamily:
    """Generators ``(a, h*a + d*b_1, ..., h*a + d*b_k)``."""

    a: int
    h: int
    d: int
    B: Tuple[int, ...]

    def __post_init__(self):
        B = tuple(int(b) for b in self.B)
        object.__setattr__(self, "B", B)
        if self.a < 1 or self.d < 1 or self.h < 0:
            raise ValidationError(f"need a >= 1, d >= 1, h >= 0; got a={self.a}, d={self.d}, h={self.h}")
        if not B or any(b < 1 for b in B) or any(x >= y for x, y in zip(B, B[1:])):
            raise ValidationError(f"B must be a strictly increasing list of positive integers, got {B}")
        if self.h * self.a + self.d * B[0] < 2:
            raise ValidationError("every generator must exceed 1")
        g = gcd_all(self.generators())
        if g != 1:
            raise GcdNotOne(g)

    def generators(self) -> List[int]:
        return [self.a] + [self.h * self.a + self.d * b for b in self.B]

    def generator_list(self) -> GeneratorList:
        return GeneratorList(tuple(sorted(set(self.generators()))))


def structured_form(A, a: Optional[int] = None) -> StructuredFamily:
    """Write ``A`` as ``(a, h*a + d*B)`` with the largest usable ``h`` and ``d``.

    Always possible when ``A`` has a generator other than ``a``.
    """
    A = as_generators(A)
    a = A.gens[0] if a is None else a
    if a not in A.gens:
        raise NotAGenerator(a, A.gens)
    rest = [g for g in A.gens if g != a]
    if not rest:
        raise ValidationError("need at least one generator besides the modulus")
    h = (min(rest) - 1) // a
    residuals = [g - h * a for g in rest]
    d = gcd_all(residuals)
    return StructuredFamily(a, h, d, tuple(r // d for r in residuals))


class OBTable:
    """Memoised min-coins values ``O_B(M)`` for ``M = 0..limit``.

    ``values[M]`` is ``None`` when ``M`` has no representation.  The table
    grows on demand; growth is serialised by a lock and readers only see
    fully written prefixes.
    """

    def __init__(self, B: Sequence[int]):
        B = tuple(sorted(set(int(b) for b in B)))
        if not B or B[0] < 1:
            raise ValidationError(f"B must be non-empty and positive, got {B}")
        self.B = B
        self._values: List[Optional[int]] = [0]
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> Tuple[Optional[int], ...]:
        return tuple(self._values)

    def extend(self, limit: int) -> None:
        if limit <= self.limit:
            return
        with self._lock:
            vals = list(self._values)
            for M in range(len(vals), limit + 1):
                best = None
                for b in self.B:
                    if b > M:
                        break
                    v = vals[M - b]
                    if v is not None and (best is None or v < best):
                        best = v
                vals.append(None if best is None else best + 1)
            self._values = vals

    def __getitem__(self, M: int) -> Optional[int]:
        if M < 0:
            return None
        self.extend(M)
        return self._values[M]

    def witness(self, M: int) -> Optional[List[int]]:
        """Multiplicities ``x_i`` (aligned with ``self.B``) attaining ``O_B(M)``.

        Backtracks through the table preferring the largest part.
        """
        if self[M] is None:
            return None
        counts = [0] * len(self.B)
        vals = self._values
        while M > 0:
            for i in range(len(self.B) - 1, -1, -1):
                b = self.B[i]
                if b <= M and vals[M - b] is not None and vals[M - b] == vals[M] - 1:
                    counts[i] += 1
                    M -= b
                    break
            else:
                raise AssertionError("inconsistent min-coins table")
        return counts


@lru_cache(maxsize=256)
def _shared_table(B: Tuple[int, ...]) -> OBTable:
    return OBTable(B)


def ob_solve(B: Sequence[int], M: int) -> Optional[int]:
    """Least number of parts summing to ``M`` with parts from ``B``; ``None`` if infeasible."""
    if M < 0:
        raise ValidationError(f"M must be non-negative, got {M}")
    return _shared_table(tuple(sorted(set(B))))[M]


def ob_witness(B: Sequence[int], M: int) -> Optional[List[int]]:
    """A minimal representation of ``M``, as multiplicities of ``sorted(set(B))``."""
    return _shared_table(tuple(sorted(set(B)))).witness(M)


def quotient_member(q: QuotientSpec, x: int) -> bool:
    return x >= 0 and is_member(q.base, q.p * x)


def _divisor_check(fam: StructuredFamily, p: int) -> int:
    if p < 1 or fam.a % p:
        raise DivisorMismatch(p, fam.a)
    return fam.a // p


def n_drp(fam: StructuredFamily, p: int, r: int) -> int:
    """Apéry entry of residue ``d*r mod a/p`` in ``<fam>/p``, via min-coins.

    The loop over ``m`` stops once a lower bound for every later ``m``
    exceeds the best value so far; the bound uses ``O_B(M) >= M / max(B)``.
    """
    q = _divisor_check(fam, p)
    if not 0 <= r < q:
        raise ValidationError(f"residue r must be in [0, {q}), got {r}")
    a, h, d = fam.a, fam.h, fam.d
    unit = h * a // p
    bmax = fam.B[-1]
    table = _shared_table(fam.B)
    best = None
    # Unreachable for valid families: the class of r*p mod gcd(B) is hit by
    # some m < gcd(B), after which the cutoff applies within a few periods.
    m_cap = 4 * (bmax + 1) * (a + bmax) + 16
    m = 0
    while True:
        M = m * a + r * p
        lower = -(-M // bmax) * unit + (m * q + r) * d
        if best is not None and lower > best:
            return best
        coins = table[M]
        if coins is not None:
            value = coins * unit + (m * q + r) * d
            if best is None or value < best:
                best = value
        m += 1
        if m > m_cap:
            raise InternalBoundError(f"m-loop did not terminate for {fam}, p={p}, r={r}")


def n_drp_table(fam: StructuredFamily, p: int) -> AperyTable:
    """Quotient Apéry table assembled from :func:`n_drp`, relabelled to residue order."""
    q = _divisor_check(fam, p)
    entries = [0] * q
    for r in range(q):
        entries[(fam.d * r) % q] = n_drp(fam, p, r)
    return AperyTable(q, tuple(entries))


def quotient_apery(q: QuotientSpec) -> AperyTable:
    """Apéry table of ``<A>/p`` w.r.t. ``a/p`` by scanning each residue class upward."""
    mod = q.modulus
    base = q.base
    F = frobenius_from_apery(base.apery)
    # p*x is a member once p*x > F(A)
    cap = (F + q.generator) // q.p + mod + 1
    entries = [0] * mod
    for r in range(1, mod):
        x = r
        steps = 0
        while not quotient_member(q, x):
            x += mod
            steps += 1
            if steps > cap:
                raise InternalBoundError(f"residue {r} of {q} not settled after {cap} steps")
        entries[r] = x
    return AperyTable(mod, tuple(entries))


def quotient_invariants(q: QuotientSpec) -> InvariantPair:
    t = quotient_apery(q)
    return InvariantPair(frobenius_from_apery(t), genus_from_apery(t))


def two_gen_quotient(a1: int, a2: int, p: int) -> InvariantPair:
    """Closed forms for ``<a1, a2>/p`` with ``p | a1``, which equals ``<a1/p, a2>``."""
    if min(a1, a2, p) < 1:
        raise NonPositiveEntry(min(a1, a2, p))
    if math.gcd(a1, a2) != 1:
        raise NotCoprime(a1, a2)
    if a1 % p:
        raise DivisorMismatch(p, a1)
    return InvariantPair(a1 * a2 // p - a1 // p - a2, (a1 - p) * (a2 - 1) // (2 * p))
