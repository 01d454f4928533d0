import pytest

from perfembed import BitWord, coordinate_map


def pytest_addoption(parser):
    parser.addoption("--m5-sweep", action="store_true", default=False,
                     help="run the full 2^31-word coverage sweep at m = 5")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--m5-sweep"):
        return
    skip = pytest.mark.skip(reason="needs --m5-sweep")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def W(s: str) -> BitWord:
    return BitWord.from_str(s)


@pytest.fixture
def cmap3():
    return coordinate_map(3)


@pytest.fixture
def cmap4():
    return coordinate_map(4)


@pytest.fixture
def cmap5():
    return coordinate_map(5)


def brute_hamming(m: int) -> set[int]:
    """H straight from the syndrome definition, using index words computed here."""
    n = (1 << m) - 1
    order = [1 << i for i in range(m)] + [a for a in range(1, 1 << m) if bin(a).count("1") >= 2]
    out = set()
    for x in range(1 << n):
        s = 0
        for i in range(n):
            if x >> i & 1:
                s ^= order[i]
        if s == 0:
            out.add(x)
    return out


def nearest(code: set[int], y: int) -> list[int]:
    return [c for c in code if bin(c ^ y).count("1") <= 1]


def ball_map(code: set[int], n: int) -> dict[int, list[int]]:
    """Every word of F^n mapped to the codewords within distance 1."""
    out: dict[int, list[int]] = {}
    for c in code:
        for y in [c] + [c ^ (1 << i) for i in range(n)]:
            out.setdefault(y, []).append(c)
    return out
