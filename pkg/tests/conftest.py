import pytest

_criteria: dict[str, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion covered by a test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    num, label = marker.args
    key = f"{num}:{item.name}"
    _criteria[key] = (f"[{num:>2}] {label}", call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda k: (int(k.split(":")[0]), k)):
        label, ok = _criteria[key]
        tr.write_line(f"{'PASS' if ok else 'FAIL'} {label}")


@pytest.fixture
def rng():
    import random
    return random.Random(20240601)
