import pytest

from bruhatcd.coxeter import CoxeterSystem

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def S2():
    return CoxeterSystem.parse_name("S2")


@pytest.fixture(scope="session")
def S3():
    return CoxeterSystem.parse_name("S3")


@pytest.fixture(scope="session")
def S4():
    return CoxeterSystem.parse_name("S4")


@pytest.fixture(scope="session")
def S5():
    return CoxeterSystem.parse_name("S5")


@pytest.fixture(scope="session")
def ex24(S4):
    """The length-5 interval [1234, 4231]."""
    return S4, S4.parse("1234"), S4.parse("4231")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
        ok, note = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {note}")
