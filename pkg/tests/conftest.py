import pytest

from hypercone.poly import LinearForm

# constraint system of the halfcube example, rewritten as l_i(t, x, y, z) >= 0
HALFCUBE_FORMS = [
    LinearForm((1, -1, 1, 1)),
    LinearForm((1, 1, -1, 1)),
    LinearForm((1, 1, 1, -1)),
    LinearForm((1, -1, -1, -1)),
]
HALFCUBE_DIR = (1, 0, 0, 0)


@pytest.fixture
def halfcube():
    return list(HALFCUBE_FORMS), HALFCUBE_DIR


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
