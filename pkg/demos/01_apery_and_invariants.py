"""
Apéry tables and the two basic invariants
=========================================

Every element of <A> is the Apéry entry of its residue plus a multiple
of the chosen generator, so the table alone determines the gaps.
"""

import numpy as np

from semiq import apery_set, build_sieve, invariants, validate_generators

A = validate_generators([9, 11, 15])
t = apery_set(A)
print("generators      ", A)
print("Apéry table     ", list(t.entries))

# largest entry minus the modulus is the largest gap
F, g = invariants(t)
print("frobenius, genus", F, g)

# the same numbers straight from a membership bitmap
sieve = build_sieve(A)
gaps = sieve.gaps()
print("gaps            ", gaps.tolist())
assert (int(gaps.max()), gaps.size) == (F, g)

# each residue class is a shifted arithmetic progression
entries = np.array(t.entries)
print("N_r mod 9       ", (entries % 9).tolist())
