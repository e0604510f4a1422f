"""Extension and labelling enumeration for every supported semantics.

The enumerator walks conflict-free candidate sets only (supersets of a
conflicting pair are pruned at the search-tree level), which keeps the sweep
feasible even when a framework carries many self-attacking helper arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import config
from .core import AF, AFError, bits, sccs

SEMANTICS = (
    "cf",
    "nav",
    "adm",
    "com",
    "grd",
    "stb",
    "stg",
    "semi",
    "prf",
    "id",
    "eag",
    "sad",
    "cf2",
    "stg2",
)

# Semantics whose labellings are in one-to-one correspondence with extensions
# via E -> (E, E+, A \ E-plus).
LABELLING_SEMANTICS = ("stb", "semi", "eag", "prf", "id", "grd", "com")

ExtensionSet = tuple[frozenset[str], ...]


class EnumerationLimitError(AFError):
    """Framework exceeds the exhaustive-enumeration argument cap."""


class UnknownSemanticsError(AFError):
    pass


def check_semantics(tag: str) -> str:
    if tag not in SEMANTICS:
        raise UnknownSemanticsError(f"unknown semantics: {tag!r}")
    return tag


def extension_key(e: frozenset[str]):
    return (len(e), tuple(sorted(e)))


def sort_extensions(sets: Iterable[frozenset[str]]) -> ExtensionSet:
    return tuple(sorted(set(sets), key=extension_key))


@dataclass(frozen=True)
class Labelling:
    in_set: frozenset[str]
    out_set: frozenset[str]
    undec_set: frozenset[str]

    def as_tuple(self):
        return (self.in_set, self.out_set, self.undec_set)


# -- conflict-free candidate sweep --------------------------------------------


def cf_masks(f: AF) -> list[int]:
    """All conflict-free subsets as bitmasks.

    Backtracks over non-self-attacking arguments; including an argument bans
    its attackers and targets for the rest of the branch.
    """
    free = [i for i in range(f.n) if not (f.succ[i] >> i) & 1]
    out = [0]

    def walk(pos: int, current: int, banned: int) -> None:
        for k in range(pos, len(free)):
            i = free[k]
            bit = 1 << i
            if banned & bit:
                continue
            nxt = current | bit
            out.append(nxt)
            walk(k + 1, nxt, banned | f.succ[i] | f.pred[i])

    walk(0, 0, 0)
    return out


def _check_limit(f: AF) -> None:
    # Self-attacking arguments never enter a conflict-free set, so the subset
    # sweep is exponential only in the non-self-attacking arguments.
    cap = config.max_enum_args()
    relevant = f.n - bin(f.loops_mask()).count("1")
    if relevant > cap:
        raise EnumerationLimitError(
            f"framework has {relevant} non-self-attacking arguments, exceeding the "
            f"enumeration cap of {cap} (raise {config.ENV_MAX_ARGS} to override)"
        )


def _maximal(masks: list[int]) -> list[int]:
    return [m for m in masks if not any(m != o and m | o == o for o in masks)]


def _range_maximal(f: AF, masks: list[int]) -> list[int]:
    ranges = {m: m | f.attacked_by_mask(m) for m in masks}
    return [
        m
        for m in masks
        if not any(ranges[m] != ranges[o] and ranges[m] | ranges[o] == ranges[o] for o in masks)
    ]


def _is_admissible(f: AF, m: int) -> bool:
    return f.attackers_of_mask(m) & ~f.attacked_by_mask(m) == 0


def _characteristic(f: AF, m: int) -> int:
    """Gamma(m): everything defended by m."""
    attacked = f.attacked_by_mask(m)
    out = 0
    for i in range(f.n):
        if f.pred[i] & ~attacked == 0:
            out |= 1 << i
    return out


def grounded_mask(f: AF) -> int:
    current = 0
    while True:
        nxt = _characteristic(f, current)
        if nxt == current:
            return current
        current = nxt


def _adm_masks(f: AF) -> list[int]:
    return [m for m in cf_masks(f) if _is_admissible(f, m)]


def _com_masks(f: AF) -> list[int]:
    return [m for m in _adm_masks(f) if _characteristic(f, m) == m]


def _grd_masks(f: AF) -> list[int]:
    return [grounded_mask(f)]


def _sub_intersection_maximal(f: AF, base: list[int], bound: int) -> list[int]:
    """Admissible sets below `bound` with no complete set strictly in between,
    the defining condition of ideal and eager semantics."""
    inside = [m for m in base if m & ~bound == 0]
    com_inside = [m for m in _com_masks(f) if m & ~bound == 0]
    return [m for m in inside if not any(m != c and m | c == c for c in com_inside)]


def _id_masks(f: AF) -> list[int]:
    prf = _maximal(_adm_masks(f))
    bound = f.full_mask
    for m in prf:
        bound &= m
    return _sub_intersection_maximal(f, _adm_masks(f), bound)


def _eag_masks(f: AF) -> list[int]:
    semi = _range_maximal(f, _adm_masks(f))
    bound = f.full_mask
    for m in semi:
        bound &= m
    return _sub_intersection_maximal(f, _adm_masks(f), bound)


def _sad_masks(f: AF) -> list[int]:
    """Strongly admissible sets via the layered construction: start from the
    unattacked arguments and repeatedly adjoin any arguments defended so far."""
    known = {0}
    frontier = [0]
    while frontier:
        m = frontier.pop()
        fresh = _characteristic(f, m) & ~m
        if not fresh:
            continue
        addable = list(bits(fresh))
        for sub in range(1, 1 << len(addable)):
            ext = m
            for j in bits(sub):
                ext |= 1 << addable[j]
            if ext not in known:
                known.add(ext)
                frontier.append(ext)
    return sorted(known)


def _scc_recursive_masks(f: AF, base: str) -> list[int]:
    memo: dict[tuple[AF, frozenset[str]], bool] = {}

    def member(g: AF, e: frozenset[str]) -> bool:
        key = (g, e)
        if key in memo:
            return memo[key]
        comps = sccs(g)
        if len(comps) <= 1:
            result = e in set(extensions(g, base))
        else:
            result = True
            for s in comps:
                up = {
                    a
                    for a in s
                    if not any((b, a) in g.attacks for b in e - s)
                }
                part = e & s
                if not part <= up:
                    result = False
                    break
                if not member(g.restrict(up), frozenset(part)):
                    result = False
                    break
        memo[key] = result
        return result

    out = []
    for m in cf_masks(f):
        if member(f, f.set_of(m)):
            out.append(m)
    return out


def extensions(f: AF, sigma: str) -> ExtensionSet:
    """All sigma-extensions of f, ordered by size then lexicographically."""
    check_semantics(sigma)
    _check_limit(f)
    if sigma == "cf":
        masks = cf_masks(f)
    elif sigma == "nav":
        masks = _maximal(cf_masks(f))
    elif sigma == "stg":
        masks = _range_maximal(f, cf_masks(f))
    elif sigma == "stb":
        full = f.full_mask
        masks = [m for m in cf_masks(f) if m | f.attacked_by_mask(m) == full]
    elif sigma == "adm":
        masks = _adm_masks(f)
    elif sigma == "semi":
        masks = _range_maximal(f, _adm_masks(f))
    elif sigma == "com":
        masks = _com_masks(f)
    elif sigma == "prf":
        masks = _maximal(_adm_masks(f))
    elif sigma == "grd":
        masks = _grd_masks(f)
    elif sigma == "id":
        masks = _id_masks(f)
    elif sigma == "eag":
        masks = _eag_masks(f)
    elif sigma == "sad":
        masks = _sad_masks(f)
    elif sigma in ("cf2", "stg2"):
        masks = _scc_recursive_masks(f, "nav" if sigma == "cf2" else "stg")
    else:  # pragma: no cover
        raise UnknownSemanticsError(sigma)
    return sort_extensions(f.set_of(m) for m in masks)


def grounded_iteration(f: AF) -> tuple[frozenset[str], list[frozenset[str]]]:
    """The grounded extension together with the iteration trace
    (empty set, then each new value of the characteristic function, up to the
    fixpoint; the repeat itself is not recorded)."""
    trace = [0]
    while True:
        nxt = _characteristic(f, trace[-1])
        if nxt == trace[-1]:
            break
        trace.append(nxt)
    return f.set_of(trace[-1]), [f.set_of(m) for m in trace]


def strongly_admissible(f: AF) -> ExtensionSet:
    """All strongly admissible sets (layered construction)."""
    _check_limit(f)
    return sort_extensions(f.set_of(m) for m in _sad_masks(f))


def labelling_of(f: AF, e: frozenset[str]) -> Labelling:
    m = f.mask_of(e)
    plus = f.attacked_by_mask(m)
    return Labelling(frozenset(e), f.set_of(plus), f.set_of(f.full_mask & ~(m | plus)))


def labellings(f: AF, sigma: str) -> tuple[Labelling, ...]:
    """sigma-labellings, one per extension, for the one-to-one family."""
    check_semantics(sigma)
    if sigma not in LABELLING_SEMANTICS:
        raise AFError(
            f"labellings are only supported for {', '.join(LABELLING_SEMANTICS)}; got {sigma!r}"
        )
    return tuple(labelling_of(f, e) for e in extensions(f, sigma))
