"""Shared fixture data: the exact-verifiability witness pairs.

Each row (sigma, weaker_class, F, F2) states that F and F2 carry identical
verification classes at `weaker_class` (hence at everything below it) while
their sigma-extensions differ. Together the rows cover, for every semantics,
all representatives strictly below its exact class.
"""

from afkit.core import AF

F1 = AF("ab", [("b", "b"), ("b", "a")])
F1P = AF("ab", [("b", "b")])
F2 = AF("abc", [("b", "b"), ("b", "c"), ("c", "b")])
F2P = AF("abc", [("b", "b"), ("a", "b"), ("c", "b"), ("b", "c")])
F3 = AF("ab", [("a", "b"), ("b", "a"), ("b", "b")])
F3P = AF("ab", [("b", "b")])
F4 = AF("ab", [("a", "b"), ("b", "a"), ("b", "b")])
F4P = AF("ab", [("b", "a"), ("b", "b")])
F5 = AF("ab", [("a", "b"), ("b", "a"), ("b", "b")])
F5P = AF("ab", [("a", "b"), ("b", "b")])
F6 = AF("ab", [("a", "b"), ("b", "b")])
F6P = AF("ab", [("b", "a"), ("b", "b")])
F7 = AF("abc", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")])
F7P = AF("abc", [("a", "b"), ("b", "a"), ("c", "c")])
# the chapter-opening pair: identical conflict-free sets, different ranges
F0 = AF("ab", [("a", "b")])
F0P = AF("ab", [("a", "b"), ("b", "a")])

EXACTNESS_FIXTURES = [
    ("com", "+±", F1, F1P),
    ("com", "−∓", F2, F2P),
    ("com", "±∓", F3, F3P),
    ("com", "−±", F4, F4P),
    ("com", "+∓", F5, F5P),
    ("com", "∩∪", F6, F6P),
    ("semi", "+", F1, F1P),
    ("semi", "∪", F6, F6P),
    ("semi", "∓", F7, F7P),
    ("eag", "+", F1, F1P),
    ("eag", "∪", F6, F6P),
    ("eag", "∓", F7, F7P),
    ("grd", "±", F1, F1P),
    ("grd", "-", F2, F2P),
    ("grd", "∪", F6, F6P),
    ("sad", "±", F1, F1P),
    ("sad", "-", F2, F2P),
    ("sad", "∪", F6, F6P),
    ("stb", "ε", F4, F4P),
    ("stg", "ε", F0, F0P),
    ("adm", "ε", F4, F4P),
    ("prf", "ε", F4, F4P),
    ("id", "ε", F4, F4P),
]
