"""Exit criteria.  Each test appends one PASS/FAIL line to RESULTS, printed at session end."""

import itertools
import math
import random
import time
from collections import Counter

import pytest

from semiq import (
    InvariantPair,
    QuotientSpec,
    StructuredFamily,
    aap_quotient,
    apery_set,
    brute_ob,
    brute_quotient_invariants,
    build_sieve,
    gap_aap_quotient,
    is_member,
    n_drp,
    ob_solve,
    odd_aap_quotient_frobenius,
    plus_minus_quotient,
    quotient_apery,
    quotient_invariants,
    scaled_quotient,
    two_gen_quotient,
    validate_generators,
)
from semiq.families import AAP, GapAAP, OddAAP, PlusMinus
from semiq.sweep import sweep_check

RESULTS = []


@pytest.fixture
def record(request):
    name = request.node.name
    state = {"detail": ""}
    yield state
    outcome = getattr(request.node, "rep_call", None)
    ok = outcome is not None and outcome.passed
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {name}  {state['detail']}")


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c1_worked_examples(record):
    cases = [
        ("aap", lambda: aap_quotient(84, 3, 101, 4, 14), AAP(84, 3, 101, 4), 14, (823, 412)),
        ("aap", lambda: aap_quotient(84, 3, 101, 4, 21), AAP(84, 3, 101, 4), 21, (491, 249)),
        ("gap-aap", lambda: gap_aap_quotient(86, 5, 9, 2, 6, 43), GapAAP(86, 5, 9, 2, 6), 43, (87, 44)),
        ("gap-aap", lambda: gap_aap_quotient(300, 4, 7, 6, 13, 5), GapAAP(300, 4, 7, 6, 13), 5, (6127, 3108)),
        ("plus-minus", lambda: plus_minus_quotient(1120, 7, 9, 28), PlusMinus(1120, 7, 9), 28, (156580, 78376)),
        ("odd-aap", lambda: (odd_aap_quotient_frobenius(33, 4, 5, 2, 11), None), OddAAP(33, 4, 5, 2), 11, (79, None)),
    ]

    def run():
        rows = []
        for name, closed, fam, p, want in cases:
            F, g = closed()
            ref = brute_quotient_invariants(validate_generators(fam.generators()), p)
            rows.append((name, (F, g), (ref.frobenius, ref.genus if g is not None else None), want))
        return rows

    rows, elapsed = _timed(run)
    record["detail"] = f"{len(rows)} examples, {elapsed:.3f}s (limit 1s)"
    for name, closed, ref, want in rows:
        assert closed == want, name
        assert ref == want, name
    assert elapsed < 1.0


def test_c2_two_generator_closed_forms(record):
    def run():
        n = 0
        for a1, a2 in itertools.product(range(1, 41), repeat=2):
            if math.gcd(a1, a2) != 1:
                continue
            A = validate_generators([a1, a2])
            sieve = build_sieve(A)
            for p in range(1, a1 + 1):
                if a1 % p == 0:
                    assert two_gen_quotient(a1, a2, p) == brute_quotient_invariants(A, p, sieve), (a1, a2, p)
                    n += 1
        return n

    n, elapsed = _timed(run)
    record["detail"] = f"{n} instances, {elapsed:.2f}s (limit 5s)"
    assert n >= 300
    assert elapsed < 5.0


SWEEPS = {
    "seed": 20240,
    "sweep": [
        {"family": "aap", "a": [2, 120], "h": [1, 4], "d": [1, 15], "samples": 2000},
        {"family": "gap-aap", "a": [2, 120], "h": [1, 4], "d": [1, 15], "K": [1, 6], "k": [3, 24], "p": "K",
         "samples": 60},
        {"family": "gap-aap", "a": [2, 120], "h": [1, 4], "d": [1, 15], "K": [1, 6], "k": [3, 24], "p": "K+1",
         "samples": 60},
        {"family": "plus-minus", "a": [2, 120], "h": [1, 4], "d": [1, 15], "samples": 500},
        {"family": "odd-aap", "a": [3, 120], "h": [1, 4], "d": [1, 15], "samples": 500},
    ],
}


def test_c3_formula_vs_oracle_sweeps(record):
    report = sweep_check(SWEEPS)
    from semiq.sweep import expand_plan

    insts = expand_plan(SWEEPS)
    at_K = sum(1 for i in insts if i["family"] == "gap-aap" and i["params"]["p"] == i["params"]["K"])
    at_K1 = sum(1 for i in insts if i["family"] == "gap-aap" and i["params"]["p"] == i["params"]["K"] + 1)
    c = report.counts
    record["detail"] = (f"aap={c.get('aap/oracle', 0)} gap(p=K)={at_K} gap(p=K+1)={at_K1} "
                        f"pm={c.get('plus-minus/oracle', 0)} odd={c.get('odd-aap/oracle', 0)} "
                        f"mismatches={report.mismatches} {report.wall_time:.1f}s (limit 60s)")
    assert report.mismatches == 0, report.first_mismatch
    assert c["aap/oracle"] >= 2000
    assert at_K >= 50 and at_K1 >= 50
    assert c["plus-minus/oracle"] >= 500
    assert c["odd-aap/oracle"] >= 500
    assert report.wall_time < 60


def test_c4_scaling_identity(record):
    rng = random.Random(11)
    n = 0
    t0 = time.perf_counter()
    while n < 500:
        a = rng.randint(2, 60)
        d = rng.randint(1, 9)
        B = sorted(rng.sample(range(1, 31), rng.randint(1, 4)))
        if math.gcd(a, *[d * b for b in B]) != 1:
            continue
        p = rng.choice([x for x in range(1, a + 1) if a % x == 0])
        baseline = quotient_invariants(QuotientSpec(validate_generators([a, *B]), p, a))
        scaled = quotient_invariants(QuotientSpec(validate_generators([a, *(d * b for b in B)]), p, a))
        assert scaled_quotient(a, d, B, p, baseline) == scaled, (a, d, B, p)
        n += 1
    record["detail"] = f"{n} instances, {time.perf_counter() - t0:.2f}s"


def _structured_instances(rng, count):
    out = []
    while len(out) < count:
        a = rng.randint(2, 60)
        h = rng.randint(0, 4)
        d = rng.randint(1, 12)
        kind = rng.choice(["aap", "gap", "odd", "random"])
        if kind == "aap":
            B = tuple(range(1, rng.randint(1, a - 1) + 1)) if a > 1 else (1,)
        elif kind == "gap":
            K = rng.randint(1, 4)
            B = tuple(range(K + 1, rng.randint(2 * K + 1, 2 * K + 8) + 1))
        elif kind == "odd":
            B = tuple(range(1, 2 * rng.randint(1, 5) + 2, 2))
        else:
            B = tuple(sorted(rng.sample(range(1, 16), rng.randint(1, 4))))
        if h * a + d * B[0] < 2 or math.gcd(a, *[h * a + d * b for b in B]) != 1:
            continue
        p = rng.choice([x for x in range(1, a + 1) if a % x == 0])
        out.append((StructuredFamily(a, h, d, B), p))
    return out


def test_c5_reduction_table_equivalence(record):
    rng = random.Random(22)
    instances = _structured_instances(rng, 250)
    for fam, p in instances:
        q = fam.a // p
        reduced = Counter(n_drp(fam, p, r) for r in range(q))
        scanned = quotient_apery(QuotientSpec(validate_generators(fam.generators()), p, fam.a))
        assert reduced == Counter(scanned.entries), (fam, p)
    record["detail"] = f"{len(instances)} structured instances"


def test_c6_oracle_self_consistency(record):
    n_ob = 0
    sets = [B for size in range(1, 7) for B in itertools.combinations(range(1, 10), size)]
    rng = random.Random(6)
    sets += [tuple(sorted(rng.sample(range(1, 61), rng.randint(1, 6)))) for _ in range(30)]
    for B in sets:
        for M in range(501):
            assert brute_ob(B, M) == ob_solve(B, M), (B, M)
            n_ob += 1

    n_tables = 0
    for _ in range(300):
        a1 = rng.randint(1, 60)
        gens = [a1] + rng.sample(range(a1 + 1, 200), rng.randint(1, 4))
        if math.gcd(*gens) != 1:
            continue
        A = validate_generators(gens)
        sieve = build_sieve(A)
        for a in A.gens[:2]:
            t = apery_set(A, a)
            assert t[0] == 0
            for r, N in enumerate(t.entries):
                assert N % a == r and N in sieve
                assert N - a < 0 or (N - a) not in sieve
            n_tables += 1
        for p in [x for x in range(1, A.gens[0] + 1) if A.gens[0] % x == 0]:
            t = quotient_apery(QuotientSpec(A, p))
            m = t.modulus
            assert t[0] == 0
            for r, N in enumerate(t.entries):
                assert N % m == r and p * N in sieve
                assert N - m < 0 or p * (N - m) not in sieve
            n_tables += 1
    record["detail"] = f"{n_ob} min-coins comparisons over {len(sets)} sets, {n_tables} Apéry tables"


def test_c7_degenerate_contracts(record):
    checked = 0
    for gens in ([3, 5], [4, 7, 9], [6, 10, 15], [12, 35], [84, 353, 454, 555, 656]):
        A = validate_generators(gens)
        a1 = A.gens[0]
        for p in range(1, 3 * a1):
            if is_member(A, p):
                assert brute_quotient_invariants(A, p) == InvariantPair(-1, 0)
                if a1 % p == 0:
                    assert quotient_invariants(QuotientSpec(A, p)) == InvariantPair(-1, 0)
                checked += 1
        assert quotient_invariants(QuotientSpec(A, a1)) == InvariantPair(-1, 0)
        checked += 1
    for a, B, p in [(12, (5, 7), 3), (9, (2,), 1), (30, (7, 11, 13), 10)]:
        base = quotient_invariants(QuotientSpec(validate_generators([a, *B]), p, a))
        assert scaled_quotient(a, 1, B, p, base) == base
        checked += 1
    record["detail"] = f"{checked} checks"

