"""
Dividing a semigroup by p
=========================

<A>/p keeps every x with p*x in <A>.  When p divides a generator a, the
quotient has an Apéry table of size a/p and we never need a bitmap.
"""

from semiq import (
    QuotientSpec,
    brute_quotient_invariants,
    quotient_apery,
    quotient_invariants,
    two_gen_quotient,
    validate_generators,
)

A = validate_generators([15, 4])
for p in (1, 3, 5, 15):
    q = QuotientSpec(A, p, a=15)
    t = quotient_apery(q)
    print(f"p={p:<3} table={list(t.entries)!s:<24} invariants={tuple(quotient_invariants(q))}")

# two generators have a closed form; compare it against the bitmap
print(two_gen_quotient(15, 4, 5), brute_quotient_invariants(A, 5))

# p not dividing any generator still works through the bitmap
print("p=7 via sieve:", tuple(brute_quotient_invariants(A, 7)))
