import pytest

_LINES = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one named check list per acceptance criterion.

    Usage: ``check = criterion(3)`` then ``check(label, ok, detail)``; call
    ``check.finish()`` to print the summary line and fail on any miss.
    """
    lines = request.config.stash.setdefault(_LINES, {})

    def make(number):
        return _Criterion(number, lines)

    return make


class _Criterion:
    def __init__(self, number, lines):
        self.number = number
        self.lines = lines
        self.results = []

    def __call__(self, label, ok, detail=""):
        self.results.append((label, bool(ok), detail))

    def finish(self):
        failed = [r for r in self.results if not r[1]]
        status = "PASS" if not failed else "FAIL"
        shown = failed or [r for r in self.results if r[2]] or self.results
        text = "; ".join(f"{label} {detail}".strip() for label, _, detail in shown)
        line = f"criterion {self.number}: {status} ({len(self.results) - len(failed)}/{len(self.results)}) {text}"
        self.lines[self.number] = line
        print(line)
        assert not failed, line


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
