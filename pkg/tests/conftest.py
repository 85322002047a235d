import random

import pytest
from hypothesis import strategies as st

from mukai_enriques.lattice import e10_preset
from mukai_enriques.mukai import MukaiVector
from mukai_enriques.picard import DivisorClass

RANK = 10


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")
    config._acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, text = marker.args
        item.config._acceptance.append((number, text, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = getattr(config, "_acceptance", [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(rows):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {number:>2}: {text}")


@pytest.fixture(scope="session")
def L():
    return e10_preset()


@pytest.fixture
def rng():
    return random.Random(20241019)


def unit(i):
    return tuple(1 if j == i else 0 for j in range(RANK))


E = unit(0)
F = unit(1)


def comb(*terms):
    out = [0] * RANK
    for k, x in terms:
        for i, a in enumerate(x):
            out[i] += k * a
    return tuple(out)


def random_class(rng, bound=5):
    return tuple(rng.randint(-bound, bound) for _ in range(RANK))


def random_vector(rng, coord_bound=5, rt_bound=99):
    r = rng.randint(-rt_bound, rt_bound)
    t = rng.randint(-rt_bound, rt_bound)
    if (t - r) % 2:
        t += 1 if t < rt_bound else -1
    return MukaiVector(r, DivisorClass(random_class(rng, coord_bound), rng.randint(0, 1)), t)


coords = st.tuples(*[st.integers(-5, 5)] * RANK)
divisors = st.builds(DivisorClass, coords, st.integers(0, 1))


@st.composite
def vectors(draw, rt=99):
    r = draw(st.integers(-rt, rt))
    t = 2 * draw(st.integers(-rt // 2, rt // 2)) + (r % 2)
    return MukaiVector(r, draw(divisors), t)


def random_exceptional(rng, bound=3):
    """Random D with |coords| <= bound, r a positive divisor of 1 + D^2, t solved from r t - D^2 = 1."""
    L = e10_preset()
    D = random_class(rng, bound)
    n = 1 + sum(D[i] * L.gram[i][j] * D[j] for i in range(RANK) for j in range(RANK))
    divs = [d for d in range(1, abs(n) + 1) if n % d == 0]
    r = rng.choice(divs)
    return MukaiVector(r, DivisorClass(D, rng.randint(0, 1)), n // r)
