"""Kernel constructions and syntactic decision of equivalence notions.

A kernel maps a framework to its redundancy-free version; equality of suitable
kernels decides the corresponding equivalence notion. The characterization
tables below cover the extension-based and labelling-based notions; cells the
literature leaves open come back as "unsupported" rather than a guess.

A bounded witness search complements the syntactic verdicts: it enumerates
expansion / deletion scenarios in a deterministic order and reports the
smallest one on which the two frameworks disagree.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import config
from .core import AF, AFError, delete, union_af
from .semantics import LABELLING_SEMANTICS, check_semantics, extensions, labellings

KERNEL_IDS = (
    "k_stb",
    "k_adm",
    "k_grd",
    "k_com",
    "ks_adm",
    "ks_grd",
    "ks_com",
    "ks_stg",
    "k_nav",
    "identity",
)

NOTIONS = ("ordinary", "E", "N", "S", "W", "L", "ND", "D", "LD", "U")
FLAVORS = ("extension", "labelling")


class UnknownKernelError(AFError):
    pass


def check_kernel(tag: str) -> str:
    if tag not in KERNEL_IDS:
        raise UnknownKernelError(f"unknown kernel: {tag!r}")
    return tag


def _loop(f: AF, a: str) -> bool:
    return (a, a) in f.attacks


def kernel(f: AF, kind: str) -> AF:
    """Apply the selected kernel; arguments are always preserved."""
    check_kernel(kind)
    if kind == "identity":
        return f
    r = f.attacks
    args = f.names

    def keep(a: str, b: str) -> bool:
        if a == b:
            return True
        if kind == "k_stb":
            return not _loop(f, a)
        if kind == "k_adm":
            return not (_loop(f, a) and ((b, a) in r or _loop(f, b)))
        if kind == "k_grd":
            return not (_loop(f, b) and (_loop(f, a) or (b, a) in r))
        if kind == "k_com":
            return not (_loop(f, a) and _loop(f, b))
        if kind == "ks_adm":
            first = _loop(f, a) and ((b, a) in r or _loop(f, b))
            second = _loop(f, b) and all(
                (a, c) in r or (c, a) in r or _loop(f, c) or (c, b) in r
                for c in args
                if (b, c) in r
            )
            return not (first or second)
        if kind == "ks_grd":
            first = _loop(f, b) and (_loop(f, a) or (b, a) in r)
            second = _loop(f, b) and all(
                (a, c) in r or (c, a) in r or _loop(f, c) for c in args if (b, c) in r
            )
            return not (first or second)
        if kind == "ks_com":
            first = _loop(f, a) and _loop(f, b)
            second = (
                _loop(f, b)
                and (b, a) not in r
                and all(
                    (a, c) in r or (c, a) in r or _loop(f, c) or (c, b) in r
                    for c in args
                    if (b, c) in r
                )
            )
            return not (first or second)
        if kind == "ks_stg":
            return not (_loop(f, a) or all(_loop(f, c) for c in args if c != a))
        raise UnknownKernelError(kind)  # pragma: no cover

    if kind == "k_nav":
        extra = [
            (a, b)
            for a in args
            for b in args
            if a != b and (_loop(f, a) or (b, a) in r or _loop(f, b))
        ]
        return AF(args, list(r) + extra)
    return AF(args, [(a, b) for a, b in r if keep(a, b)])


# -- characterization tables ---------------------------------------------------

_EXT_TABLE_SEMANTICS = (
    "stg",
    "stb",
    "semi",
    "eag",
    "adm",
    "prf",
    "id",
    "grd",
    "com",
    "nav",
    "cf2",
    "stg2",
)

_LAB_TABLE_SEMANTICS = ("stb", "semi", "eag", "adm", "prf", "id", "grd", "com")

# Markers for cells decided by a dedicated criterion rather than kernel equality.
CRITERION = "criterion"

_E_ROW = {
    "stg": "k_stb",
    "stb": "k_stb",
    "semi": "k_adm",
    "eag": "k_adm",
    "adm": "k_adm",
    "prf": "k_adm",
    "id": "k_adm",
    "grd": "k_grd",
    "com": "k_com",
    "nav": "k_nav",
    "cf2": "identity",
    "stg2": "identity",
    # strongly admissible sets share the grounded kernel
    "sad": "k_grd",
}

_EXT_TABLE: dict[str, dict[str, Optional[str]]] = {
    "E": dict(_E_ROW),
    "N": {s: k for s, k in _E_ROW.items() if s != "sad"},
    "S": {
        "stg": "k_stb",
        "stb": "k_stb",
        "semi": "k_adm",
        "eag": "k_adm",
        "adm": "ks_adm",
        "prf": "ks_adm",
        "id": "ks_adm",
        "grd": "ks_grd",
        "com": "ks_com",
        "nav": "k_nav",
    },
    "L": {
        "stg": "ks_stg",
        "semi": "k_adm",
        "eag": "k_adm",
        "adm": "k_adm",
        "prf": "k_adm",
        "id": "k_adm",
        "nav": "k_nav",
    },
    "W": {"stb": CRITERION},
    "ND": {"stb": "k_stb", "adm": CRITERION, "grd": CRITERION, "com": CRITERION},
    "D": {s: "identity" for s in _EXT_TABLE_SEMANTICS},
    "LD": {s: "identity" for s in _EXT_TABLE_SEMANTICS},
    "U": {s: "identity" for s in _EXT_TABLE_SEMANTICS},
}

_LAB_COMMON = {
    "stb": "k_stb",
    "semi": "k_adm",
    "eag": "k_adm",
    "adm": "k_com",
    "prf": "k_adm",
    "id": "k_adm",
    "grd": "k_grd",
    "com": "k_com",
}

_LAB_TABLE: dict[str, dict[str, Optional[str]]] = {
    "E": dict(_LAB_COMMON),
    "N": dict(_LAB_COMMON),
    "S": dict(_LAB_COMMON),
    "ND": dict(_LAB_COMMON),
    "L": {
        "semi": "k_adm",
        "eag": "k_adm",
        "adm": "k_com",
        "prf": "k_adm",
        "id": "k_adm",
    },
    "W": {},
    "D": {s: "identity" for s in _LAB_TABLE_SEMANTICS},
    "LD": {s: "identity" for s in _LAB_TABLE_SEMANTICS},
    "U": {s: "identity" for s in _LAB_TABLE_SEMANTICS},
}


def characterizing_kernel(notion: str, sigma: str, flavor: str = "extension") -> Optional[str]:
    """The kernel whose equality decides the notion, or None when the cell is
    open / only characterized through a non-kernel criterion."""
    if notion not in NOTIONS:
        raise AFError(f"unknown equivalence notion: {notion!r}")
    if flavor not in FLAVORS:
        raise AFError(f"unknown flavor: {flavor!r}")
    check_semantics(sigma)
    if notion == "ordinary":
        return None
    table = _EXT_TABLE if flavor == "extension" else _LAB_TABLE
    cell = table.get(notion, {}).get(sigma)
    if cell == CRITERION:
        return None
    return cell


@dataclass(frozen=True)
class EquivalenceVerdict:
    answer: str  # equivalent | not_equivalent | unsupported
    method: str  # kernel | identity | criterion | none
    detail: str = ""

    @property
    def supported(self) -> bool:
        return self.answer != "unsupported"


def _nl_restricted(f: AF, shared: set[str]) -> set[str]:
    sub = f.restrict(shared)
    return {a for a in sub.names if (a, a) not in sub.attacks}


def _normal_deletion_criterion(f: AF, g: AF, sigma: str) -> EquivalenceVerdict:
    """Three-condition theorem for normal deletion equivalence of adm/com/grd."""
    shared = set(f.names) & set(g.names)
    only_f = set(f.names) - shared
    only_g = set(g.names) - shared
    # non-shared arguments must be self-defeating
    if not all((a, a) in f.attacks for a in only_f) or not all(
        (a, a) in g.attacks for a in only_g
    ):
        return EquivalenceVerdict("not_equivalent", "criterion", "non-shared argument without self-loop")
    nl_f = _nl_restricted(f, shared)
    nl_g = _nl_restricted(g, shared)
    if sigma == "adm":
        # counter-attack if attacked
        ok = all(
            (a, b) in f.attacks for b in only_f for a in nl_f if (b, a) in f.attacks
        ) and all((a, b) in g.attacks for b in only_g for a in nl_g if (b, a) in g.attacks)
    else:
        # forbidden to be attacked
        ok = all((b, a) not in f.attacks for b in only_f for a in nl_f) and all(
            (b, a) not in g.attacks for b in only_g for a in nl_g
        )
    if not ok:
        return EquivalenceVerdict("not_equivalent", "criterion", "attack condition on non-shared arguments fails")
    k = "ks_adm" if sigma == "adm" else ("ks_grd" if sigma == "grd" else "ks_com")
    if kernel(f.restrict(shared), k) == kernel(g.restrict(shared), k):
        return EquivalenceVerdict("equivalent", "criterion", f"{k} on shared arguments")
    return EquivalenceVerdict("not_equivalent", "criterion", f"{k} on shared arguments differs")


def _weak_stable_criterion(f: AF, g: AF) -> EquivalenceVerdict:
    sf = extensions(f, "stb")
    sg = extensions(g, "stb")
    if not sf and not sg:
        return EquivalenceVerdict("equivalent", "criterion", "both lack stable extensions")
    if f.args == g.args and sf == sg:
        return EquivalenceVerdict("equivalent", "criterion", "same arguments and stable extensions")
    return EquivalenceVerdict("not_equivalent", "criterion", "weak-expansion criterion fails")


def decide_equivalence(
    f: AF, g: AF, notion: str, sigma: str, flavor: str = "extension"
) -> EquivalenceVerdict:
    """Decide the equivalence notion for f and g, syntactically where possible."""
    if notion not in NOTIONS:
        raise AFError(f"unknown equivalence notion: {notion!r}")
    if flavor not in FLAVORS:
        raise AFError(f"unknown flavor: {flavor!r}")
    check_semantics(sigma)
    if notion == "ordinary":
        if flavor == "extension":
            same = extensions(f, sigma) == extensions(g, sigma)
        else:
            if sigma not in LABELLING_SEMANTICS:
                return EquivalenceVerdict("unsupported", "none", f"no labelling semantics for {sigma}")
            same = set(labellings(f, sigma)) == set(labellings(g, sigma))
        return EquivalenceVerdict(
            "equivalent" if same else "not_equivalent", "criterion", "semantic comparison"
        )
    table = _EXT_TABLE if flavor == "extension" else _LAB_TABLE
    cell = table.get(notion, {}).get(sigma)
    if cell is None:
        return EquivalenceVerdict("unsupported", "none", "cell open in the literature")
    if cell == CRITERION:
        if flavor == "extension" and notion == "W" and sigma == "stb":
            return _weak_stable_criterion(f, g)
        if flavor == "extension" and notion == "ND":
            return _normal_deletion_criterion(f, g, sigma)
        return EquivalenceVerdict("unsupported", "none", "cell open in the literature")
    if cell == "identity":
        same = f == g
        return EquivalenceVerdict(
            "equivalent" if same else "not_equivalent", "identity", "syntactic identity"
        )
    same = kernel(f, cell) == kernel(g, cell)
    return EquivalenceVerdict("equivalent" if same else "not_equivalent", "kernel", cell)


# -- bounded witness search ----------------------------------------------------

FRESH_PREFIX = "_w"

EXPANSION_NOTIONS = ("E", "N", "S", "L")
DELETION_NOTIONS = ("ND", "D", "LD")


@dataclass(frozen=True)
class SearchBudget:
    fresh_args: int = 1
    max_attacks: int = 3


@dataclass(frozen=True)
class DeletionWitness:
    args: frozenset[str]
    attacks: frozenset[tuple[str, str]]


@dataclass(frozen=True)
class SearchResult:
    witness: Optional[object]  # AF for expansions, DeletionWitness for deletions
    complete: bool  # whole budgeted space scanned

    @property
    def found(self) -> bool:
        return self.witness is not None


def _differ(f: AF, g: AF, sigma: str, flavor: str) -> bool:
    if flavor == "labelling":
        return set(labellings(f, sigma)) != set(labellings(g, sigma))
    return extensions(f, sigma) != extensions(g, sigma)


def _is_normal_for(base: AF, h: AF) -> bool:
    return all(a not in base.args or b not in base.args for a, b in h.attacks - base.attacks)


def _is_strong_for(base: AF, h: AF) -> bool:
    if not _is_normal_for(base, h):
        return False
    return all(
        not (a in base.args and b not in base.args) for a, b in h.attacks - base.attacks
    )


def _valid_expansion(f: AF, g: AF, h: AF, notion: str) -> bool:
    if notion == "E":
        return True
    if notion == "N":
        return _is_normal_for(f, h) and _is_normal_for(g, h)
    if notion == "S":
        return _is_strong_for(f, h) and _is_strong_for(g, h)
    if notion == "L":
        return h.args <= (f.args | g.args)
    raise AFError(notion)  # pragma: no cover


def _expansion_candidates(f: AF, g: AF, notion: str, budget: SearchBudget):
    """Candidate expansions H, ordered by (fresh-argument count, attack count,
    lexicographic form). Fresh arguments always occur in at least one attack;
    isolated candidates only draw on arguments the two frameworks do not share.
    """
    old = sorted(f.args | g.args)
    sym_diff = sorted(f.args ^ g.args)
    boring = f.attacks & g.attacks
    max_fresh = 0 if notion == "L" else budget.fresh_args
    for n_fresh in range(max_fresh + 1):
        fresh = [f"{FRESH_PREFIX}{i}" for i in range(n_fresh)]
        pool = old + fresh
        slots = sorted((a, b) for a in pool for b in pool if (a, b) not in boring)
        for n_att in range(budget.max_attacks + 1):
            for attacks in itertools.combinations(slots, n_att):
                used = {a for pair in attacks for a in pair}
                if any(x not in used for x in fresh):
                    continue  # every fresh argument must take part
                iso_pool = [a for a in sym_diff if a not in used]
                for k_iso in range(len(iso_pool) + 1):
                    for iso in itertools.combinations(iso_pool, k_iso):
                        h = AF(used | set(iso), attacks)
                        if _valid_expansion(f, g, h, notion):
                            yield h


def _deletion_candidates(f: AF, g: AF, notion: str, budget: SearchBudget):
    old = sorted(f.args | g.args)
    all_attacks = sorted(f.attacks | g.attacks)
    arg_choices = [()] if notion == "LD" else None
    if arg_choices is None:
        arg_choices = [
            c for size in range(len(old) + 1) for c in itertools.combinations(old, size)
        ]
    att_choices = [()] if notion == "ND" else [
        c
        for size in range(min(budget.max_attacks, len(all_attacks)) + 1)
        for c in itertools.combinations(all_attacks, size)
    ]
    for args in arg_choices:
        for atts in att_choices:
            yield DeletionWitness(frozenset(args), frozenset(atts))


def _expansion_separates(f: AF, g: AF, h: AF, sigma: str, flavor: str) -> bool:
    return _differ(union_af(f, h), union_af(g, h), sigma, flavor)


def _deletion_separates(f: AF, g: AF, w: DeletionWitness, sigma: str, flavor: str) -> bool:
    return _differ(delete(f, w.args, w.attacks), delete(g, w.args, w.attacks), sigma, flavor)


def _eval_expansion_chunk(payload):
    f, g, chunk, sigma, flavor = payload
    for i, h in enumerate(chunk):
        if _expansion_separates(f, g, h, sigma, flavor):
            return i
    return None


def search_counterexample(
    f: AF,
    g: AF,
    notion: str,
    sigma: str,
    budget: SearchBudget = SearchBudget(),
    flavor: str = "extension",
    max_candidates: Optional[int] = None,
) -> SearchResult:
    """Look for the smallest scenario within budget on which f and g disagree.

    A result with witness=None and complete=True means the whole budgeted space
    was scanned without success; complete=False means the max_candidates valve
    cut the scan short.
    """
    if notion not in EXPANSION_NOTIONS + DELETION_NOTIONS:
        raise AFError(f"witness search does not handle notion {notion!r}")
    check_semantics(sigma)
    if notion in EXPANSION_NOTIONS:
        candidates = _expansion_candidates(f, g, notion, budget)
        separates = lambda w: _expansion_separates(f, g, w, sigma, flavor)
    else:
        candidates = _deletion_candidates(f, g, notion, budget)
        separates = lambda w: _deletion_separates(f, g, w, sigma, flavor)

    workers = config.worker_count()
    seen = 0
    if workers > 1 and notion in EXPANSION_NOTIONS:
        chunk_size = 64
        with ProcessPoolExecutor(max_workers=workers) as pool:
            while True:
                chunk = list(itertools.islice(candidates, chunk_size * workers))
                if not chunk:
                    return SearchResult(None, True)
                if max_candidates is not None and seen + len(chunk) > max_candidates:
                    chunk = chunk[: max_candidates - seen]
                pieces = [chunk[i : i + chunk_size] for i in range(0, len(chunk), chunk_size)]
                payloads = [(f, g, piece, sigma, flavor) for piece in pieces]
                for piece, hit in zip(pieces, pool.map(_eval_expansion_chunk, payloads)):
                    if hit is not None:
                        return SearchResult(piece[hit], True)
                seen += len(chunk)
                if max_candidates is not None and seen >= max_candidates:
                    return SearchResult(None, False)
    for w in candidates:
        if max_candidates is not None and seen >= max_candidates:
            return SearchResult(None, False)
        seen += 1
        if separates(w):
            return SearchResult(w, True)
    return SearchResult(None, True)
