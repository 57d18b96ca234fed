"""
Closed forms for structured families
====================================

Each evaluator checks its hypotheses first and refuses instances it
cannot handle, so a caller can fall back to the generic path.
"""

from semiq import (
    ConstraintViolation,
    TPrimeOdd,
    aap_quotient,
    brute_quotient_invariants,
    gap_aap_quotient,
    odd_aap_quotient_frobenius,
    plus_minus_quotient,
)
from semiq.families import AAP, GapAAP, OddAAP, PlusMinus

rows = [
    ("aap", aap_quotient(84, 3, 101, 4, 21), AAP(84, 3, 101, 4), 21),
    ("gap-aap", gap_aap_quotient(86, 5, 9, 2, 6, 43), GapAAP(86, 5, 9, 2, 6), 43),
    ("plus-minus", plus_minus_quotient(1120, 7, 9, 28), PlusMinus(1120, 7, 9), 28),
]
for name, got, fam, p in rows:
    ref = brute_quotient_invariants(fam.generators(), p)
    print(f"{name:<11} closed form {tuple(got)}  sieve {tuple(ref)}")

F = odd_aap_quotient_frobenius(33, 4, 5, 2, 11)
print(f"{'odd-aap':<11} frobenius {F}  sieve {brute_quotient_invariants(OddAAP(33, 4, 5, 2).generators(), 11).frobenius}")

# out-of-range inputs are rejected with the failing clause
for call in (lambda: aap_quotient(10, 1, 3, 12, 2), lambda: odd_aap_quotient_frobenius(33, 4, 5, 2, 3)):
    try:
        call()
    except TPrimeOdd as exc:
        print("refused:", exc)
    except ConstraintViolation as exc:
        print("refused:", exc)
