import pytest

from widecat.exactarith import QQ, IntegerRing
from widecat.polyring import PolyRing

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record a named acceptance result so the summary prints one line per criterion."""

    def record(key, title, ok, detail=""):
        _CRITERIA[key] = (title, bool(ok), detail)
        line = f"criterion {key} ({title}): {'PASS' if ok else 'FAIL'}"
        print(line + (f" [{detail}]" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[key]
        line = f"criterion {key} ({title}): {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f" [{detail}]" if detail else ""))


@pytest.fixture(scope="session")
def qxy():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture(scope="session")
def zz():
    return IntegerRing()
