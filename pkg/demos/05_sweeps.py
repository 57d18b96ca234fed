"""
Sweeping a family against the sieve
===================================

Plans are plain dicts (or TOML files); sampling is seeded so reruns
produce the same instances.
"""

from semiq.sweep import bundled_plan, sweep_check

plan = {
    "name": "demo",
    "seed": 3,
    "sweep": [
        {"family": "aap", "a": [2, 60], "h": [1, 3], "d": [1, 9], "samples": 200},
        {"family": "plus-minus", "a": [2, 60], "h": [1, 3], "d": [1, 9], "samples": 100},
        {"family": "two-gen", "a1": [1, 15], "a2": [1, 15]},
    ],
}
report = sweep_check(plan)
print(report.instances, "instances,", report.mismatches, "mismatches")
for key, n in sorted(report.counts.items()):
    print(f"  {key:<20} {n}")

# the bundled worked-example plan checks four routes per instance
worked = sweep_check(bundled_plan("paper-examples.toml"))
print("bundled examples:", worked.instances, "checks,", worked.mismatches, "mismatches")
