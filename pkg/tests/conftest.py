"""Shared strategies and the acceptance-summary terminal hook."""

from hypothesis import strategies as st

from partycover.graphs import from_red_mask, num_edges

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


@st.composite
def colorings(draw, min_n=2, max_n=10):
    """Random ColoredCocktail with even n in [min_n, max_n]."""
    n = 2 * draw(st.integers(min_value=min_n // 2, max_value=max_n // 2))
    mask = draw(st.integers(min_value=0, max_value=(1 << num_edges(n)) - 1))
    return from_red_mask(n, mask)


@st.composite
def colorings_with_subset(draw, min_n=2, max_n=10):
    """(g, S) with S an arbitrary vertex mask of g."""
    g = draw(colorings(min_n=min_n, max_n=max_n))
    members = draw(st.integers(min_value=0, max_value=(1 << g.n) - 1))
    return g, members


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
