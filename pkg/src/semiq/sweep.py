"""Batch comparison of closed forms against independent computations.

A plan is a dict (usually loaded from TOML) with optional ``name`` and
``seed``, a list of explicit ``case`` entries and a list of ``sweep``
entries.  See the README for the schema.
"""

from __future__ import annotations

import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .core import validate_generators
from .errors import MismatchFound, SemiqError, ValidationError
from .families import VARIANTS, FamilySpec, evaluate
from .oracle import brute_quotient_invariants
from .quotient import (
    QuotientSpec,
    n_drp_table,
    quotient_apery,
    quotient_invariants,
    two_gen_quotient,
)

__all__ = ["PlanError", "SweepReport", "load_plan", "bundled_plan", "expand_plan", "run_instance", "sweep_check"]

COMPARE_TARGETS = ("oracle", "generic", "prop2.2")
FAMILIES = tuple(VARIANTS) + ("two-gen",)


class PlanError(ValidationError):
    pass


def _divisors(n):
    small = [i for i in range(1, math.isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


def _span(spec, name, lo_min=None, hi_max=None, step=1):
    if spec is None:
        raise PlanError(f"missing range for {name!r}")
    if isinstance(spec, int):
        lo = hi = spec
    elif isinstance(spec, list) and len(spec) == 2 and all(isinstance(v, int) for v in spec):
        lo, hi = spec
    else:
        raise PlanError(f"{name!r} must be an integer or a [lo, hi] pair, got {spec!r}")
    if lo_min is not None:
        lo = max(lo, lo_min)
    if hi_max is not None:
        hi = min(hi, hi_max)
    return range(lo, hi + 1, step)


def _p_domain(spec, n, params):
    if spec == "divisors":
        return _divisors(n)
    if spec in ("K", "K+1"):
        p = params["K"] + (spec == "K+1")
        return [p] if n % p == 0 else []
    if isinstance(spec, int):
        spec = [spec]
    if isinstance(spec, list):
        return [p for p in spec if isinstance(p, int) and p >= 1 and n % p == 0]
    raise PlanError(f"p must be 'divisors', 'K', 'K+1' or a list, got {spec!r}")


def _domains(sw: dict) -> List[Tuple[str, Callable[[dict], Any]]]:
    """Ordered (name, domain) pairs; each domain sees the params drawn so far."""
    fam = sw["family"]
    p_spec = sw.get("p", "divisors")
    a_step = sw.get("a_step", 1)

    def rng(name, **kw):
        return lambda P: _span(sw.get(name), name, **kw)

    if fam == "two-gen":
        return [("a1", rng("a1")), ("a2", rng("a2")), ("p", lambda P: _p_domain(p_spec, P["a1"], P))]
    head = [("a", lambda P: _span(sw.get("a"), "a", step=a_step))]
    p_dom = ("p", lambda P: _p_domain(p_spec, P["a"], P))
    if fam == "scaled":
        return head + [("d", rng("d")), ("B", None), p_dom]
    head += [("h", rng("h")), ("d", rng("d"))]
    if fam == "aap":
        return head + [("k", lambda P: _span(sw.get("k", [1, P["a"] - 1]), "k", 1, P["a"] - 1)), p_dom]
    if fam == "gap-aap":
        return head + [
            ("K", rng("K", lo_min=1)),
            ("k", lambda P: _span(sw.get("k"), "k", lo_min=2 * P["K"] + 1)),
            p_dom,
        ]
    if fam == "plus-minus":
        return head + [p_dom]
    if fam == "odd-aap":
        return head + [("k", lambda P: _span(sw.get("k", [1, P["a"]]), "k", 1, (P["a"] - 2) // 2)), p_dom]
    raise PlanError(f"unknown family {fam!r}; expected one of {FAMILIES}")


def _draw_B(sw, rng):
    counts = _span(sw.get("b_count", [1, 3]), "b_count", lo_min=1)
    b_max = sw.get("b_max", 20)
    n = rng.choice(counts)
    if n > b_max:
        return None
    return tuple(sorted(rng.sample(range(1, b_max + 1), n)))


def _enumerate(doms, P=None) -> Iterator[dict]:
    P = {} if P is None else P
    if len(P) == len(doms):
        yield dict(P)
        return
    name, dom = doms[len(P)]
    if dom is None:
        raise PlanError(f"{name!r} cannot be enumerated; give `samples`")
    for v in dom(P):
        P[name] = v
        yield from _enumerate(doms, P)
        del P[name]


def _sample(sw, doms, rng) -> Optional[dict]:
    P: Dict[str, Any] = {}
    for name, dom in doms:
        if dom is None:
            v = _draw_B(sw, rng)
            if v is None:
                return None
        else:
            values = dom(P)
            if len(values) == 0:
                return None
            v = rng.choice(values)
        P[name] = v
    return P


def _family_spec(family, params) -> FamilySpec:
    cls = VARIANTS[family]
    args = {k: v for k, v in params.items() if k != "p"}
    if "B" in args:
        args["B"] = tuple(args["B"])
    return FamilySpec(cls(**args), params["p"])


def _valid(family, params, target=None) -> bool:
    try:
        if family == "two-gen":
            return math.gcd(params["a1"], params["a2"]) == 1 and params["a1"] % params["p"] == 0
        spec = _family_spec(family, params)
        spec.validate()
        # a generator equal to 1 has no (a, h*a + d*B) form with h*a + d*b_1 >= 2
        return target != "prop2.2" or spec.variant.structured() is not None
    except SemiqError:
        return False


def instance_key(inst: dict) -> tuple:
    params = inst["params"]
    return (inst["family"], inst["compare"], tuple(sorted((k, str(v)) for k, v in params.items())))


def expand_plan(plan: dict) -> List[dict]:
    """All instances of a plan, deduplicated and sorted by key."""
    if not isinstance(plan, dict):
        raise PlanError("plan must be a table")
    seed = plan.get("seed", 0)
    out = {}
    for case in plan.get("case", []):
        case = dict(case)
        family = case.pop("family", None)
        if family not in FAMILIES:
            raise PlanError(f"case has unknown family {family!r}")
        expect = case.pop("expect", None)
        targets = case.pop("compare", ["oracle"])
        targets = [targets] if isinstance(targets, str) else targets
        if not _valid(family, case):
            raise PlanError(f"case {family} {case} violates the family hypotheses")
        for t in targets:
            inst = {"family": family, "compare": t, "params": case, "expect": expect}
            out[instance_key(inst)] = inst
    for idx, sw in enumerate(plan.get("sweep", [])):
        family = sw.get("family")
        target = sw.get("compare", "oracle")
        if family not in FAMILIES:
            raise PlanError(f"sweep {idx} has unknown family {family!r}")
        if target not in COMPARE_TARGETS:
            raise PlanError(f"sweep {idx}: compare must be one of {COMPARE_TARGETS}")
        if target == "prop2.2" and family in ("plus-minus", "two-gen"):
            raise PlanError(f"sweep {idx}: prop2.2 comparison needs a family with non-negative offsets")
        doms = _domains(sw)
        found = {}
        samples = sw.get("samples")
        if samples is None:
            for P in _enumerate(doms):
                if _valid(family, P, target):
                    inst = {"family": family, "compare": target, "params": P, "expect": None}
                    found[instance_key(inst)] = inst
        else:
            rng = random.Random(f"{seed}:{idx}")
            attempts = 0
            while len(found) < samples and attempts < 200 * samples:
                attempts += 1
                P = _sample(sw, doms, rng)
                if P is None or not _valid(family, P, target):
                    continue
                inst = {"family": family, "compare": target, "params": P, "expect": None}
                found.setdefault(instance_key(inst), inst)
        out.update(found)
    return [out[k] for k in sorted(out)]


def _normalise(pair):
    f, g = pair
    return [int(f), None if g is None else int(g)]


def run_instance(inst: dict) -> dict:
    """Evaluate one instance; returns a result dict with ``ok`` and both sides."""
    family, params, target = inst["family"], dict(inst["params"]), inst["compare"]
    if family == "two-gen":
        gens = [params["a1"], params["a2"]]
        a = params["a1"]
        formula = _normalise(two_gen_quotient(params["a1"], params["a2"], params["p"]))
    else:
        spec = _family_spec(family, params)
        gens = spec.generators()
        a = params["a"]
        formula = _normalise(evaluate(spec))
    p = params["p"]
    A = validate_generators(gens)
    if target == "oracle":
        other = _normalise(brute_quotient_invariants(A, p))
    elif target == "generic":
        other = _normalise(quotient_invariants(QuotientSpec(A, p, a)))
    else:
        reduced = n_drp_table(spec.variant.structured(), p)
        scanned = quotient_apery(QuotientSpec(A, p, a))
        formula = list(reduced.entries)
        other = list(scanned.entries)
    if formula[1:2] == [None]:
        other = [other[0], None]
    ok = formula == other
    expect = inst.get("expect")
    if expect is not None and target != "prop2.2":
        want = [expect["frobenius"], expect.get("genus")]
        ok = ok and formula == want
    else:
        want = None
    return {"family": family, "compare": target, "params": params, "generators": list(A.gens),
            "closed_form": formula, "reference": other, "expected": want, "ok": ok}


@dataclass
class SweepReport:
    name: str
    instances: int
    mismatches: int
    wall_time: float
    counts: Dict[str, int] = field(default_factory=dict)
    first_mismatch: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "mismatches": self.mismatches,
            "wall_time": round(self.wall_time, 3),
            "counts": dict(sorted(self.counts.items())),
            "first_mismatch": self.first_mismatch,
        }


def sweep_check(plan: dict, jobs: int = 1, raise_on_mismatch: bool = False) -> SweepReport:
    """Run every instance of ``plan``.  Output order is independent of ``jobs``."""
    t0 = time.perf_counter()
    instances = expand_plan(plan)
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, instances, chunksize=max(1, len(instances) // (8 * jobs))))
    else:
        results = [run_instance(i) for i in instances]
    counts: Dict[str, int] = {}
    for r in results:
        key = f"{r['family']}/{r['compare']}"
        counts[key] = counts.get(key, 0) + 1
    bad = [r for r in results if not r["ok"]]
    report = SweepReport(
        name=plan.get("name", "sweep"),
        instances=len(results),
        mismatches=len(bad),
        wall_time=time.perf_counter() - t0,
        counts=counts,
        first_mismatch=bad[0] if bad else None,
    )
    if bad and raise_on_mismatch:
        first = bad[0]
        raise MismatchFound(first, first["reference"], first["closed_form"])
    return report


def load_plan(path) -> dict:
    """Read a TOML plan from ``path``; bare names fall back to the bundled plans."""
    path = Path(path)
    if not path.exists():
        bundled = bundled_plan(path.name if path.suffix else path.name + ".toml")
        if bundled is None:
            raise PlanError(f"no such sweep config: {path}")
        return bundled
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise PlanError(f"malformed sweep config {path}: {exc}") from None


def bundled_plan(name: str) -> Optional[dict]:
    res = resources.files("semiq") / "sweeps" / name
    if not res.is_file():
        return None
    return tomllib.loads(res.read_text(encoding="utf-8"))
