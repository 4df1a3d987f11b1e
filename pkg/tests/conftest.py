import random

import pytest
from hypothesis import strategies as st

from lechlab.ideals import complement, ideal_sum, minimalize
from lechlab.rings import VERONESE, AmbientRing, parse_ring
from lechlab.search import random_ideal
from lechlab.tgraded import tgraded

POLY1 = AmbientRing.polynomial(1)
POLY2 = AmbientRing.polynomial(2)
POLY3 = AmbientRing.polynomial(3)
VER = parse_ring(VERONESE)


@pytest.fixture
def k2():
    return POLY2


@pytest.fixture
def veronese():
    return VER


def ideals_in(ring, max_degree=4):
    """Seeded m-primary ideals; shrinking moves toward seed 0."""
    return st.integers(0, 10**6).map(lambda s: random_ideal(ring, random.Random(s), max_degree))


def random_chain(ring, rng: random.Random, max_k=3, max_degree=3):
    """Ascending chain I_0 ⊆ ... ⊆ I_{K-1} of proper ideals with I_0 m-primary."""
    comps = [random_ideal(ring, rng, max_degree)]
    for _ in range(rng.randint(0, max_k - 1)):
        prev = comps[-1]
        pts = [p for p in complement(prev) if any(p)]
        if not pts:
            break
        nxt = ideal_sum(prev, minimalize(rng.sample(pts, rng.randint(1, min(2, len(pts)))), ring))
        comps.append(nxt)
    return tgraded(ring, comps)


def chains_in(ring, max_k=3):
    return st.integers(0, 10**6).map(lambda s: random_chain(ring, random.Random(s), max_k))


# acceptance criteria record one line each; printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
