import math
from functools import reduce

from hypothesis import strategies as st


@st.composite
def generator_lists(draw, max_first=60, max_len=5, max_value=150):
    """Sorted generator lists with gcd 1 and smallest element <= max_first."""
    first = draw(st.integers(1, max_first))
    rest = draw(st.lists(st.integers(first + 1, max_value), min_size=1, max_size=max_len - 1, unique=True))
    gens = sorted({first, *rest})
    g = reduce(math.gcd, gens)
    if g != 1:
        # force coprimality by adding a generator that is 1 mod g
        gens = sorted({*gens, first * g + 1 if first > 1 else 1})
    return gens


import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
