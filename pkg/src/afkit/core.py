"""Finite argumentation frameworks and the set algebra everything else builds on.

Arguments are plain strings over [A-Za-z0-9_]. An AF interns its arguments to
dense indices (lexicographic order) and stores the attack relation as
per-argument successor/predecessor bitmasks, so range computations and the
exhaustive subset sweeps of the semantics module stay cheap.

All values are immutable after construction; every operation is a pure
function returning fresh values.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

ARG_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

# Names starting with "_" are reserved for machine-generated arguments
# (witness search, canonical constructions); parsers reject them in user input.
RESERVED_PREFIX = "_"


class AFError(ValueError):
    """Malformed framework or argument-set input."""


def check_arg_name(name: str) -> str:
    if not isinstance(name, str) or not ARG_NAME_RE.match(name):
        raise AFError(f"invalid argument name: {name!r}")
    return name


class AF:
    """Immutable finite argumentation framework (argument set + attack relation)."""

    __slots__ = ("names", "index", "succ", "pred", "_attacks", "_hash")

    def __init__(self, args: Iterable[str], attacks: Iterable[tuple[str, str]] = ()):
        names = tuple(sorted({check_arg_name(a) for a in args}))
        index = {name: i for i, name in enumerate(names)}
        succ = [0] * len(names)
        pred = [0] * len(names)
        pairs = set()
        for a, b in attacks:
            if a not in index or b not in index:
                raise AFError(f"attack endpoint not declared: ({a!r}, {b!r})")
            pairs.add((a, b))
            succ[index[a]] |= 1 << index[b]
            pred[index[b]] |= 1 << index[a]
        self.names = names
        self.index = index
        self.succ = tuple(succ)
        self.pred = tuple(pred)
        self._attacks = frozenset(pairs)
        self._hash = hash((names, self._attacks))

    # -- basic views ---------------------------------------------------------

    @property
    def args(self) -> frozenset[str]:
        return frozenset(self.names)

    @property
    def attacks(self) -> frozenset[tuple[str, str]]:
        return self._attacks

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, AF):
            return NotImplemented
        return self.names == other.names and self._attacks == other._attacks

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        atts = ",".join(f"({a},{b})" for a, b in sorted(self._attacks))
        return f"AF({{{','.join(self.names)}}}, {{{atts}}})"

    # -- mask helpers --------------------------------------------------------

    def mask_of(self, members: Iterable[str]) -> int:
        m = 0
        for a in members:
            try:
                m |= 1 << self.index[a]
            except KeyError:
                raise AFError(f"argument {a!r} not in framework") from None
        return m

    def set_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in bits(mask))

    def attacked_by_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.succ[i]
        return out

    def attackers_of_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.pred[i]
        return out

    def is_conflict_free_mask(self, mask: int) -> bool:
        for i in bits(mask):
            if self.succ[i] & mask:
                return False
        return True

    def loops_mask(self) -> int:
        m = 0
        for i in range(len(self.names)):
            if self.succ[i] & (1 << i):
                m |= 1 << i
        return m

    # -- structural operations -----------------------------------------------

    def restrict(self, keep: Iterable[str]) -> "AF":
        keep_set = set(keep) & set(self.names)
        return AF(keep_set, [(a, b) for a, b in self._attacks if a in keep_set and b in keep_set])

    def attack(self, a: str, b: str) -> bool:
        return (a, b) in self._attacks


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def union_af(f: AF, g: AF) -> AF:
    """Pointwise union of two frameworks."""
    return AF(f.args | g.args, list(f.attacks) + list(g.attacks))


def delete(f: AF, args: Iterable[str] = (), attacks: Iterable[tuple[str, str]] = ()) -> AF:
    """Update F \\ [B, S]: drop the attacks in S, then restrict to the surviving arguments.

    Neither B nor S needs to occur in F.
    """
    drop_args = set(args)
    drop_attacks = set(attacks)
    keep = [a for a in f.names if a not in drop_args]
    keep_set = set(keep)
    return AF(
        keep,
        [
            (a, b)
            for a, b in f.attacks
            if (a, b) not in drop_attacks and a in keep_set and b in keep_set
        ],
    )


def _checked_mask(f: AF, members: Iterable[str]) -> int:
    return f.mask_of(members)


def range_of(f: AF, e: Iterable[str]) -> frozenset[str]:
    """E plus everything E attacks."""
    m = _checked_mask(f, e)
    return f.set_of(m | f.attacked_by_mask(m))


def anti_range(f: AF, e: Iterable[str]) -> frozenset[str]:
    """E plus everything attacking E."""
    m = _checked_mask(f, e)
    return f.set_of(m | f.attackers_of_mask(m))


def loops(f: AF) -> frozenset[str]:
    """All self-attacking arguments."""
    return f.set_of(f.loops_mask())


def sccs(f: AF) -> list[frozenset[str]]:
    """Strongly connected components, in topological order of the condensation
    (attackers before attacked), ties broken by lexicographically least member.
    """
    n = f.n
    comp = _tarjan(f)
    n_comps = max(comp) + 1 if n else 0
    members: list[list[int]] = [[] for _ in range(n_comps)]
    for v, c in enumerate(comp):
        members[c].append(v)
    # edges of the condensation
    out: list[set[int]] = [set() for _ in range(n_comps)]
    indeg = [0] * n_comps
    for v in range(n):
        for w in bits(f.succ[v]):
            if comp[v] != comp[w] and comp[w] not in out[comp[v]]:
                out[comp[v]].add(comp[w])
                indeg[comp[w]] += 1
    # Kahn with a least-member tie-break for a deterministic topological order
    least = [min(f.names[v] for v in ms) for ms in members]
    ready = sorted((c for c in range(n_comps) if indeg[c] == 0), key=lambda c: least[c])
    order: list[frozenset[str]] = []
    while ready:
        c = ready.pop(0)
        order.append(frozenset(f.names[v] for v in members[c]))
        fresh = []
        for d in out[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                fresh.append(d)
        ready = sorted(ready + fresh, key=lambda c2: least[c2])
    return order


def _tarjan(f: AF) -> list[int]:
    """Component index per argument (iterative Tarjan)."""
    n = f.n
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    n_comps = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, iter(bits(f.succ[root])))]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(bits(f.succ[w]))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index_of[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comps
                    if w == v:
                        break
                n_comps += 1
    return comp
