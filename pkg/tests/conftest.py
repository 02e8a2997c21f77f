import pytest

from kissfabric import GridSpec, build_fabric

# lines collected by tests/test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def example_spec():
    """The D2 fabric with all curvatures labelled in the paper's example."""
    return GridSpec(d=1.0, ax=0.5, ay=0.0, r=1.0)


@pytest.fixture(scope="session")
def example_fabric(example_spec):
    return build_fabric(example_spec, (-5, 5))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
