import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from afkit.core import AF


@pytest.fixture
def f_six():
    """F from the six-framework stable-kernel walkthrough."""
    return AF("abcd", [("b", "a"), ("b", "c"), ("c", "c"), ("d", "c")])


@pytest.fixture
def g_six():
    """G from the same walkthrough (three arguments, as in the source figure)."""
    return AF("bcd", [("b", "c"), ("c", "b"), ("c", "c"), ("c", "d")])


@pytest.fixture
def g_six_wide():
    """The four-argument variant of G used by the kernel and loops examples."""
    return AF("abcd", [("b", "c"), ("c", "b"), ("c", "c"), ("c", "d")])


@pytest.fixture
def h_six():
    return AF("be", [("e", "b")])


@pytest.fixture
def f_layers():
    """Six-argument framework with the ten strongly admissible sets."""
    return AF(
        "abcdef",
        [("e", "e"), ("a", "b"), ("b", "c"), ("c", "e"), ("e", "f"), ("f", "e"), ("d", "e")],
    )


@pytest.fixture
def f_neigh():
    """Three-argument framework of the verification-class walkthrough."""
    return AF("abc", [("a", "b"), ("b", "a"), ("b", "b"), ("c", "b")])


@pytest.fixture
def three_cycle():
    return AF(["a1", "a2", "a3"], [("a1", "a2"), ("a2", "a3"), ("a3", "a1")])


@pytest.fixture
def s_defense():
    """The conflict-sensitive but non-tight candidate set of the defense-formula
    walkthrough."""
    return [{"a", "b"}, {"a", "d", "e"}, {"b", "c", "e"}]


@pytest.fixture
def hub_13():
    """Thirteen-argument framework whose hub argument is preferred-accepted but
    semi-stable- and stage-rejected."""
    args = ["a1", "a2", "a3", "b1", "b2", "b3", "x1", "x2", "x3", "y1", "y2", "y3", "z"]
    atts = [
        ("x1", "a3"), ("x2", "a1"), ("x3", "a2"),
        ("y1", "b3"), ("y2", "b1"), ("y3", "b2"),
        ("a3", "a1"), ("a1", "a2"), ("a2", "a3"),
        ("b3", "b1"), ("b1", "b2"), ("b2", "b3"),
    ]
    xy = ["x1", "x2", "x3", "y1", "y2", "y3"]
    for i, u in enumerate(xy):
        for v in xy[i + 1:]:
            atts += [(u, v), (v, u)]
    for u in xy:
        atts += [("z", u), (u, "z")]
    return AF(args, atts)
