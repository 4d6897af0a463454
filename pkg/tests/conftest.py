import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bouquets.rotation import SignedRotation  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def rotations(draw, min_edges=0, max_edges=6, orientable=None):
    m = draw(st.integers(min_edges, max_edges))
    word = draw(st.permutations([k for k in range(1, m + 1) for _ in (0, 1)]))
    word = list(word)
    for k in range(1, m + 1):
        if orientable is True:
            continue
        twist = orientable is False and k == 1 or draw(st.booleans())
        if twist:
            side = draw(st.integers(0, 1))
            idx = [i for i, t in enumerate(word) if t == k][side]
            word[idx] = -k
    return SignedRotation(word)


@st.composite
def rotation_and_subset(draw, max_edges=6):
    rot = draw(rotations(max_edges=max_edges))
    A = draw(st.sets(st.sampled_from(range(1, rot.m + 1)))) if rot.m else set()
    return rot, A


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  [{elapsed:.2f}s]")
