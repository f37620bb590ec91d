import pytest

from heapalg import _debug

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(autouse=True)
def _internal_checks(request):
    # sweeps run without the per-heap assertions; everything else runs with them
    enabled = request.module.__name__.rsplit(".", 1)[-1] != "test_acceptance"
    with _debug.checks(enabled):
        yield


@pytest.fixture
def record():
    """``record(n, title, ok, detail)`` logs one acceptance criterion."""

    def _record(n: int, title: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE[n] = (title, ok, detail)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[n]
        line = f"CRITERION {n:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
