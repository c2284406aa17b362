import pytest

# criterion number -> (passed, title, detail); filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, title: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE[number] = (bool(passed), title, detail)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, title, detail = ACCEPTANCE[number]
        line = f"{'PASS' if passed else 'FAIL'} {number:>2}. {title}"
        tr.write_line(line + (f"  [{detail}]" if detail else ""))
    done = sum(p for p, _, _ in ACCEPTANCE.values())
    tr.write_line(f"{done}/{len(ACCEPTANCE)} criteria passed")
