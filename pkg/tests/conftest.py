import pytest

from resconic.modelfile import builtin_names, load_model

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def models():
    return {name: load_model(f"builtin:{name}") for name in builtin_names()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
