import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import strategies as st  # noqa: E402

from tgs import FiniteTGS  # noqa: E402
from tgs.fixtures import FIXTURES  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(FIXTURES), ids=str)
def fixture_system(request):
    return request.param, FIXTURES[request.param]()


@st.composite
def tables(draw, max_n=3, max_m=2):
    """Arbitrary (not necessarily axiom-satisfying) small systems."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n ** 3 * m ** 2,
                         max_size=n ** 3 * m ** 2))
    return FiniteTGS([f"S{i}" for i in range(n)], [f"g{i}" for i in range(m)], flat)
