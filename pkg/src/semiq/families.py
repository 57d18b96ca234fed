"""Closed forms for quotients of structured generator families by ``p | a``.

Every evaluator checks all hypotheses of its formula first and raises
:class:`~semiq.errors.ConstraintViolation` naming the first one that
fails.  Outside those hypotheses the formulas are simply wrong, so there
is no fallback.

Families (generators listed with ``a`` first):

==========  =====================================================
scaled      ``(a, d*b_1, ..., d*b_k)``
aap         ``(a, h*a + d, h*a + 2d, ..., h*a + k*d)``
gap-aap     ``(a, h*a + (K+1)d, ..., h*a + k*d)``
plus-minus  ``(a, h*a - d, h*a + d)``
odd-aap     ``(a, h*a + d, h*a + 3d, ..., h*a + (2k+1)d)``
==========  =====================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .core import InvariantPair, gcd_all, validate_generators
from .errors import ConstraintViolation, InternalBoundError, NonIntegerResult, TPrimeOdd
from .quotient import QuotientSpec, StructuredFamily, quotient_invariants

__all__ = [
    "Scaled",
    "AAP",
    "GapAAP",
    "PlusMinus",
    "OddAAP",
    "FamilySpec",
    "scaled_quotient",
    "aap_quotient",
    "gap_aap_quotient",
    "plus_minus_quotient",
    "odd_aap_quotient_frobenius",
    "evaluate",
    "VARIANTS",
]


def _require(cond, family, clause):
    if not cond:
        raise ConstraintViolation(family, clause)


def _positive(family, **params):
    for name, value in params.items():
        _require(isinstance(value, int) and value >= 1, family, f"{name} >= 1 (got {value})")


def _ceil_div(x, y):
    return -(-x // y)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to {value}; hypotheses must have been violated")
    return value.numerator


@dataclass(frozen=True)
class Scaled:
    a: int
    d: int
    B: Tuple[int, ...]
    name = "scaled"

    def generators(self) -> List[int]:
        return [self.a] + [self.d * b for b in self.B]

    def structured(self) -> Optional[StructuredFamily]:
        B = tuple(sorted(set(self.B)))
        if self.d * B[0] < 2:
            return None
        return StructuredFamily(self.a, 0, self.d, B)

    def validate(self, p):
        _positive(self.name, a=self.a, d=self.d, p=p)
        _require(len(self.B) >= 1 and all(isinstance(b, int) and b >= 1 for b in self.B),
                 self.name, "B is a non-empty list of positive integers")
        _require(gcd_all(self.generators()) == 1, self.name, "gcd(A) = 1")
        _require(self.a % p == 0, self.name, "p | a")


@dataclass(frozen=True)
class AAP:
    a: int
    h: int
    d: int
    k: int
    name = "aap"

    def generators(self) -> List[int]:
        return [self.a] + [self.h * self.a + i * self.d for i in range(1, self.k + 1)]

    def structured(self) -> StructuredFamily:
        return StructuredFamily(self.a, self.h, self.d, tuple(range(1, self.k + 1)))

    def validate(self, p):
        _positive(self.name, a=self.a, h=self.h, d=self.d, k=self.k, p=p)
        _require(1 <= self.k <= self.a - 1, self.name, "1 <= k <= a-1")
        _require(gcd_all(self.generators()) == 1, self.name, "gcd(A) = 1")
        _require(self.a % p == 0, self.name, "p | a")


@dataclass(frozen=True)
class GapAAP:
    a: int
    h: int
    d: int
    K: int
    k: int
    name = "gap-aap"

    def generators(self) -> List[int]:
        return [self.a] + [self.h * self.a + i * self.d for i in range(self.K + 1, self.k + 1)]

    def structured(self) -> StructuredFamily:
        return StructuredFamily(self.a, self.h, self.d, tuple(range(self.K + 1, self.k + 1)))

    def validate(self, p):
        _positive(self.name, a=self.a, h=self.h, d=self.d, K=self.K, k=self.k, p=p)
        _require(2 * self.K <= self.k - 1, self.name, "K <= (k-1)/2")
        _require(self.a >= 2, self.name, "a >= 2")
        # with K >= a the p <= K branch reads an Apéry entry outside 1..a/p-1 and is wrong,
        # e.g. a=2, h=d=1, K=2, k=5, p=1 gives (4, 4) against the true (3, 2)
        _require(self.K < self.a, self.name, "K < a")
        _require(gcd_all(self.generators()) == 1, self.name, "gcd(A) = 1")
        _require(self.a % p == 0, self.name, "p | a")


@dataclass(frozen=True)
class PlusMinus:
    a: int
    h: int
    d: int
    name = "plus-minus"

    def generators(self) -> List[int]:
        return [self.a, self.h * self.a - self.d, self.h * self.a + self.d]

    def structured(self) -> None:
        # the h*a - d generator has a negative offset; min-coins over N does not apply
        return None

    def validate(self, p):
        _positive(self.name, a=self.a, h=self.h, d=self.d, p=p)
        _require(math.gcd(self.a, self.d) == 1, self.name, "gcd(a, d) = 1")
        _require(self.h * self.a - self.d > 1, self.name, "h*a - d > 1")
        _require(gcd_all(self.generators()) == 1, self.name, "gcd(A) = 1")
        _require(self.a % p == 0, self.name, "p | a")


@dataclass(frozen=True)
class OddAAP:
    a: int
    h: int
    d: int
    k: int
    name = "odd-aap"

    def generators(self) -> List[int]:
        return [self.a] + [self.h * self.a + (2 * i + 1) * self.d for i in range(self.k + 1)]

    def structured(self) -> StructuredFamily:
        return StructuredFamily(self.a, self.h, self.d, tuple(range(1, 2 * self.k + 2, 2)))

    def t_prime(self, p) -> int:
        # a - p = (2k+1)s' + t' with 1 <= t' <= 2k+1
        return (self.a - p - 1) % (2 * self.k + 1) + 1

    def validate(self, p):
        _positive(self.name, a=self.a, h=self.h, d=self.d, k=self.k, p=p)
        _require(self.a > 2, self.name, "a > 2")
        _require(3 <= 2 * self.k + 1 <= self.a - 1, self.name, "3 <= 2k+1 <= a-1")
        _require(gcd_all(self.generators()) == 1, self.name, "gcd(A) = 1")
        _require(self.a % p == 0, self.name, "p | a")
        t = self.t_prime(p)
        if t % 2:
            raise TPrimeOdd(t)


Variant = Union[Scaled, AAP, GapAAP, PlusMinus, OddAAP]
VARIANTS = {cls.name: cls for cls in (Scaled, AAP, GapAAP, PlusMinus, OddAAP)}


@dataclass(frozen=True)
class FamilySpec:
    variant: Variant
    p: int

    def validate(self):
        self.variant.validate(self.p)

    def generators(self) -> List[int]:
        return self.variant.generators()

    def params(self) -> dict:
        out = {f.name: getattr(self.variant, f.name) for f in fields(self.variant)}
        if "B" in out:
            out["B"] = list(out["B"])
        out["p"] = self.p
        return out


def scaled_quotient(a: int, d: int, B, p: int, baseline: Optional[InvariantPair] = None) -> InvariantPair:
    """Invariants of ``<a, d*B>/p`` from those of ``<a, B>/p``.

    ``baseline`` is computed with the generic quotient path when omitted.
    """
    fam = Scaled(a, d, tuple(B))
    fam.validate(p)
    if baseline is None:
        baseline = quotient_invariants(QuotientSpec(validate_generators([a, *B]), p, a))
    F = d * baseline.frobenius + a * (d - 1) // p
    g = _exact(d * baseline.genus + Fraction((a - p) * (d - 1), 2 * p), "genus")
    return InvariantPair(F, g)


def _aap_sum(r_lo, r_hi, p, k, shift=0):
    return sum(_ceil_div(shift + r * p, k) for r in range(r_lo, r_hi + 1))


def aap_quotient(a: int, h: int, d: int, k: int, p: int) -> InvariantPair:
    AAP(a, h, d, k).validate(p)
    q = a // p
    F = _ceil_div(a - p, k) * (h * a // p) + a * (d - 1) // p - d
    g = _exact(h * _aap_sum(1, q - 1, p, k) + Fraction((a - p) * (d - 1), 2 * p), "genus")
    return InvariantPair(F, g)


def gap_aap_quotient(a: int, h: int, d: int, K: int, k: int, p: int) -> InvariantPair:
    GapAAP(a, h, d, K, k).validate(p)
    q = a // p
    half = Fraction((a - p) * (d - 1), 2 * p)
    if p > K:
        F = _ceil_div(a - p, k) * (h * a // p) + a * (d - 1) // p - d
        g = _exact(h * _aap_sum(1, q - 1, p, k) + half, "genus")
    else:
        c = K // p
        F = _ceil_div(a + c * p, k) * (h * a // p) + a * (d - 1) // p + c * d
        total = _aap_sum(1, c, p, k, shift=a) + _aap_sum(c + 1, q - 1, p, k)
        g = _exact(h * total + half + c * d, "genus")
    return InvariantPair(F, g)


def plus_minus_quotient(a: int, h: int, d: int, p: int) -> InvariantPair:
    PlusMinus(a, h, d).validate(p)
    q = a // p
    lo, hi = h * a - d, h * a + d
    crossover = Fraction(lo, 2 * h * p)
    if not 0 < crossover < q:
        raise InternalBoundError(f"crossover {crossover} outside (0, {q})")
    s = math.floor(crossover)
    F = max(s * hi - q, (q - math.ceil(crossover)) * lo - q)
    g = (Fraction(hi * p * s * (s + 1), 2 * a)
         + Fraction(lo * (a - s * p) * (a - s * p - p), 2 * p * a)
         - Fraction(a - p, 2 * p))
    return InvariantPair(F, _exact(g, "genus"))


def odd_aap_quotient_frobenius(a: int, h: int, d: int, k: int, p: int) -> int:
    """Frobenius number only; no genus formula is available for this family.

    Raises :class:`~semiq.errors.TPrimeOdd` when ``a - p`` leaves an odd
    remainder ``t'`` (taken in ``1..2k+1``) modulo ``2k+1``.
    """
    OddAAP(a, h, d, k).validate(p)
    num = h * a * ((a - p - 1) // (2 * k + 1) + 2) + (a - p) * d - a
    return _exact(Fraction(num, p), "frobenius")


def evaluate(spec: FamilySpec, baseline: Optional[InvariantPair] = None) -> Tuple[int, Optional[int]]:
    """Closed-form ``(frobenius, genus)``; genus is ``None`` for odd-aap."""
    v, p = spec.variant, spec.p
    if isinstance(v, Scaled):
        return tuple(scaled_quotient(v.a, v.d, v.B, p, baseline))
    if isinstance(v, AAP):
        return tuple(aap_quotient(v.a, v.h, v.d, v.k, p))
    if isinstance(v, GapAAP):
        return tuple(gap_aap_quotient(v.a, v.h, v.d, v.K, v.k, p))
    if isinstance(v, PlusMinus):
        return tuple(plus_minus_quotient(v.a, v.h, v.d, p))
    if isinstance(v, OddAAP):
        return odd_aap_quotient_frobenius(v.a, v.h, v.d, v.k, p), None
    raise TypeError(f"unknown family variant {v!r}")
