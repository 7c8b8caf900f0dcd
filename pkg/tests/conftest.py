import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from pathmonoid import PathTransformation, enumerate_wend  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@st.composite
def transformations(draw, min_n=1, max_n=8, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    images = draw(st.lists(st.integers(1, n), min_size=n, max_size=n))
    return PathTransformation(tuple(images))


@st.composite
def same_size_maps(draw, count, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(transformations(n=n)) for _ in range(count))


@st.composite
def weak_endomorphisms(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n))
    j = draw(st.integers(0, n - k))
    cuts = []
    if k > 1:
        cuts = sorted(draw(st.sets(st.integers(1, n - 1), min_size=k - 1, max_size=k - 1)))
    bounds = [0] + cuts + [n]
    images = []
    for t in range(k):
        images += [j + t + 1] * (bounds[t + 1] - bounds[t])
    return PathTransformation(tuple(images))


@pytest.fixture(scope="session")
def wend_sets():
    return {n: list(enumerate_wend(n)) for n in range(1, 13)}


# One line per acceptance criterion, printed at the end of the run.
_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
