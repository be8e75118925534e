import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from permgauge import LieSpec, adjoint_subcategory, deligne_product, kac_peterson, reverse  # noqa: E402
from permgauge.gauge import PermutationGauging  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fib():
    return adjoint_subcategory(kac_peterson(LieSpec("A", 1, 3)))


@pytest.fixture(scope="session")
def ising():
    return kac_peterson(LieSpec("A", 1, 2))


@pytest.fixture(scope="session")
def adj5():
    return adjoint_subcategory(kac_peterson(LieSpec("A", 1, 5)))


@pytest.fixture(scope="session")
def g2():
    return kac_peterson(LieSpec("G2", 2, 3))


@pytest.fixture(scope="session")
def core(fib):
    return deligne_product(reverse(fib), reverse(fib))


@pytest.fixture(scope="session")
def gauged(fib, ising, adj5, core, g2):
    """Gauging contexts and their rings, keyed by name."""
    out = {}
    for name, md in [("fib", fib), ("ising", ising), ("adj5", adj5), ("core", core), ("g2", g2)]:
        g = PermutationGauging(md)
        out[name] = (g, g.fusion())
    return out
