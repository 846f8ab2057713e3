import pytest
from hypothesis import settings

settings.register_profile("ksl", max_examples=60, deadline=None)
settings.load_profile("ksl")

_acceptance_lines = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_acceptance_lines] = []


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion, echoed in the terminal summary."""
    lines = request.config.stash[_acceptance_lines]

    def report(label, ok, elapsed, limit):
        budget = f" / limit {limit:g}s" if limit is not None else ""
        line = f"{'PASS' if ok else 'FAIL'}  {label}  [{elapsed:.3f}s{budget}]"
        lines.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_lines, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
