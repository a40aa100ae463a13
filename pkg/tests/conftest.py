from hypothesis import strategies as st
from hypothesis import settings

from torbord.simplicial import from_masks, parse_complex

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

E1 = parse_complex(4, [[1, 2, 3], [4]])
E2 = parse_complex(3, [])
E3 = parse_complex(3, [[1, 2], [1, 3], [2, 3]])
E4 = parse_complex(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4]])
E5a = parse_complex(5, [[1], [2, 3], [3, 4], [3, 5], [4, 5]])
E5b = parse_complex(5, [[1], [2, 3, 4], [3, 5], [4, 5]])
E6 = parse_complex(3, [[1]])
# three isolated vertices and a ghost; bordant to E1
THREE_POINTS = parse_complex(4, [[1], [2], [3]])

# PASS/FAIL lines from the acceptance gate, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


FIXTURES = {"E1": E1, "E2": E2, "E3": E3, "E4": E4, "E5a": E5a, "E5b": E5b, "E6": E6}


@st.composite
def complexes(draw, min_m=2, max_m=6):
    m = draw(st.integers(min_m, max_m))
    full = (1 << m) - 1
    masks = draw(st.lists(st.integers(0, full - 1), max_size=m + 2))
    return from_masks(m, masks)
