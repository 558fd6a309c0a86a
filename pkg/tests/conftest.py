from hypothesis import settings, strategies as st

from negn.partitions import YoungDiagram
from negn.stable import StableRep

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def diagrams(draw, max_area=10, min_area=0):
    n = draw(st.integers(min_value=min_area, max_value=max_area))
    rows = []
    remaining, cap = n, n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, cap)))
        rows.append(part)
        remaining -= part
        cap = part
    return YoungDiagram(tuple(rows))


@st.composite
def stable_reps(draw, max_area=5):
    return StableRep(draw(diagrams(max_area)), draw(diagrams(max_area)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
