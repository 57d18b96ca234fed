"""
From quotient Apéry entries to a coin problem
=============================================

Generators a, h*a + d*b_1, ..., h*a + d*b_k: an entry of the quotient
table is a minimum over a one-parameter family of min-coins values.
"""

from collections import Counter

from semiq import QuotientSpec, StructuredFamily, ob_solve, ob_witness, quotient_apery
from semiq.quotient import n_drp

fam = StructuredFamily(a=84, h=3, d=101, B=(1, 2, 3, 4))
p = 14
print("generators", fam.generators())

# fewest parts from B summing to M, with a witness
for M in (7, 13, 31):
    print(f"O_B({M}) = {ob_solve(fam.B, M)}  parts per b: {ob_witness(fam.B, M)}")

reduced = [n_drp(fam, p, r) for r in range(fam.a // p)]
scanned = quotient_apery(QuotientSpec(fam.generator_list(), p, fam.a))
print("reduced entries", sorted(reduced))
print("scanned entries", list(scanned.entries))
assert Counter(reduced) == Counter(scanned.entries)
print("frobenius", max(reduced) - fam.a // p)
