"""Extension-set analysis, signature decisions, canonical realizing frameworks,
and the compact/analytic classification of frameworks.

Candidate extension-sets are plain collections of argument sets. The structural
predicates (tight, incomparable, conflict-sensitive, downward-closed) decide
membership in the finite signatures; where only necessary conditions are known
(the compact and analytic variants of some semantics) the verdict says so
explicitly instead of pretending to decide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import AF, AFError
from .semantics import ExtensionSet, check_semantics, extensions, sort_extensions

SIGNATURE_SEMANTICS = ("cf", "nav", "stb", "stg", "adm", "prf", "semi", "grd", "id", "eag")
VARIANTS = ("finite", "finite_compact", "finite_analytic")

# semantics for which compact / analytic classification is defined
CLASSIFIABLE_SEMANTICS = (
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
    "cf2",
    "stg2",
)

BLOCKER_PREFIX = "_bE"
DEFENSE_PREFIX = "_alpha_"
MIRROR_PREFIX = "_m_"


def normalize_candidate(sets: Iterable[Iterable[str]]) -> ExtensionSet:
    return sort_extensions(frozenset(s) for s in sets)


def args_of(sets: ExtensionSet) -> frozenset[str]:
    out: set[str] = set()
    for s in sets:
        out |= s
    return frozenset(out)


def pairs_of(sets: ExtensionSet) -> frozenset[frozenset[str]]:
    """Unordered pairs of jointly occurring arguments (singletons stand for (a,a))."""
    out: set[frozenset[str]] = set()
    for s in sets:
        for a in s:
            out.add(frozenset((a,)))
            for b in s:
                if a < b:
                    out.add(frozenset((a, b)))
    return frozenset(out)


def _joint(pairs: frozenset[frozenset[str]], a: str, b: str) -> bool:
    return (frozenset((a,)) if a == b else frozenset((a, b))) in pairs


def downward_closure(sets: ExtensionSet) -> ExtensionSet:
    out: set[frozenset[str]] = set()
    for s in sets:
        members = sorted(s)
        for size in range(len(members) + 1):
            for combo in itertools.combinations(members, size):
                out.add(frozenset(combo))
    return sort_extensions(out)


def is_incomparable(sets: ExtensionSet) -> bool:
    return not any(a < b for a in sets for b in sets)


def is_downward_closed(sets: ExtensionSet) -> bool:
    return set(sets) == set(downward_closure(sets))


def is_tight(sets: ExtensionSet) -> bool:
    pairs = pairs_of(sets)
    universe = args_of(sets)
    members = set(sets)
    for s in sets:
        for a in universe:
            if s | {a} in members:
                continue
            if all(_joint(pairs, a, x) for x in s):
                return False
    return True


def is_conflict_sensitive(sets: ExtensionSet) -> bool:
    pairs = pairs_of(sets)
    members = set(sets)
    for a_set, b_set in itertools.combinations(sets, 2):
        union = a_set | b_set
        if union in members:
            continue
        if all(_joint(pairs, x, y) for x in union for y in union):
            return False
    return True


@dataclass(frozen=True)
class SetAnalysis:
    nonempty: bool
    contains_empty: bool
    singleton: bool
    incomparable: bool
    downward_closed: bool
    tight: bool
    dcl_tight: bool
    conflict_sensitive: bool
    args: frozenset[str]
    pairs: frozenset[frozenset[str]]


def analyze(sets: Iterable[Iterable[str]]) -> SetAnalysis:
    cand = normalize_candidate(sets)
    return SetAnalysis(
        nonempty=len(cand) > 0,
        contains_empty=frozenset() in cand,
        singleton=len(cand) == 1,
        incomparable=is_incomparable(cand),
        downward_closed=is_downward_closed(cand),
        tight=is_tight(cand),
        dcl_tight=is_tight(downward_closure(cand)),
        conflict_sensitive=is_conflict_sensitive(cand),
        args=args_of(cand),
        pairs=pairs_of(cand),
    )


@dataclass(frozen=True)
class SignatureVerdict:
    answer: str  # yes | no | necessary_only
    condition_holds: Optional[bool] = None  # set for necessary_only

    @property
    def decided(self) -> bool:
        return self.answer in ("yes", "no")


def _finite_criterion(cand: ExtensionSet, sigma: str) -> bool:
    a = analyze(cand)
    if sigma == "cf":
        return a.nonempty and a.downward_closed and a.tight
    if sigma == "nav":
        return a.nonempty and a.incomparable and a.dcl_tight
    if sigma == "stb":
        return a.incomparable and a.tight
    if sigma == "stg":
        return a.nonempty and a.incomparable and a.tight
    if sigma == "adm":
        return a.contains_empty and a.conflict_sensitive
    if sigma in ("prf", "semi"):
        return a.nonempty and a.incomparable and a.conflict_sensitive
    if sigma in ("grd", "id", "eag"):
        return a.singleton
    raise AFError(sigma)  # pragma: no cover


# variant -> semantics whose criterion remains exact
_EXACT_CELLS = {
    "finite": set(SIGNATURE_SEMANTICS),
    "finite_compact": {"cf", "nav", "grd", "id", "eag"},
    "finite_analytic": {"cf", "nav", "grd", "id", "eag", "stb", "stg"},
}


def decide_signature(sets: Iterable[Iterable[str]], sigma: str, variant: str = "finite") -> SignatureVerdict:
    """Membership of the candidate set in the sigma-signature of the variant.

    Cells where the literature provides only necessary conditions return
    `necessary_only` with the condition's truth value, never a bare yes/no.
    """
    check_semantics(sigma)
    if sigma not in SIGNATURE_SEMANTICS:
        raise AFError(f"signature membership is undecided for semantics {sigma!r}")
    if variant not in VARIANTS:
        raise AFError(f"unknown signature variant: {variant!r}")
    cand = normalize_candidate(sets)
    holds = _finite_criterion(cand, sigma)
    if sigma in _EXACT_CELLS[variant]:
        return SignatureVerdict("yes" if holds else "no")
    return SignatureVerdict("necessary_only", condition_holds=holds)


# -- canonical constructions ----------------------------------------------------


def canonical_cf(sets: Iterable[Iterable[str]]) -> AF:
    """Symmetric framework attacking exactly the non-jointly-occurring pairs."""
    cand = normalize_candidate(sets)
    universe = sorted(args_of(cand))
    pairs = pairs_of(cand)
    attacks = [
        (a, b) for a in universe for b in universe if not _joint(pairs, a, b)
    ]
    return AF(universe, attacks)


def canonical_stb(sets: Iterable[Iterable[str]]) -> AF:
    """canonical_cf plus one self-attacking blocker per undesired stable extension."""
    cand = normalize_candidate(sets)
    base = canonical_cf(cand)
    undesired = [e for e in extensions(base, "stb") if e not in set(cand)]
    args = list(base.names)
    attacks = list(base.attacks)
    universe = args_of(cand)
    for i, e in enumerate(undesired):
        blocker = f"{BLOCKER_PREFIX}{i}"
        args.append(blocker)
        attacks.append((blocker, blocker))
        for a in sorted(universe - e):
            attacks.append((a, blocker))
    return AF(args, attacks)


def defense_formula_cnf(sets: Iterable[Iterable[str]], a: str) -> frozenset[frozenset[str]]:
    """Clauses (sets of arguments) logically equivalent to the defense formula of
    `a`: the disjunction over the sets containing `a` of the conjunction of their
    other members. Subsumed clauses are removed; a tautology is the empty set."""
    cand = normalize_candidate(sets)
    if a not in args_of(cand):
        raise AFError(f"argument {a!r} does not occur in the candidate set")
    disjuncts = [frozenset(s - {a}) for s in cand if a in s]
    if any(not d for d in disjuncts):
        return frozenset()  # {a} itself occurs: tautology
    clauses: set[frozenset[str]] = set()
    for combo in itertools.product(*disjuncts):
        clauses.add(frozenset(combo))
    minimal = {c for c in clauses if not any(o < c for o in clauses)}
    return frozenset(minimal)


def _clause_order(clauses: frozenset[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(clauses, key=lambda c: (len(c), tuple(sorted(c))))


def canonical_def(sets: Iterable[Iterable[str]]) -> AF:
    """canonical_cf plus one self-attacking defense argument per CNF clause,
    attacking the defended argument and attacked by the clause members."""
    cand = normalize_candidate(sets)
    base = canonical_cf(cand)
    args = list(base.names)
    attacks = list(base.attacks)
    for a in base.names:
        for j, clause in enumerate(_clause_order(defense_formula_cnf(cand, a))):
            alpha = f"{DEFENSE_PREFIX}{a}_{j}"
            args.append(alpha)
            attacks.append((alpha, alpha))
            attacks.append((alpha, a))
            for b in sorted(clause):
                attacks.append((b, alpha))
    return AF(args, attacks)


def _prf_to_semi(f: AF) -> AF:
    """Mirror every argument with a self-attacking prime so that the semi-stable
    extensions of the result are the preferred extensions of the input."""
    args = list(f.names)
    attacks = list(f.attacks)
    for a in f.names:
        prime = f"{MIRROR_PREFIX}{a}"
        args.append(prime)
        attacks.append((a, prime))
        attacks.append((prime, prime))
    return AF(args, attacks)


class RealizationDefect(RuntimeError):
    """The canonical construction failed verification; this is a bug, not bad input."""


def realize(sets: Iterable[Iterable[str]], sigma: str) -> Optional[AF]:
    """A framework whose sigma-extensions are exactly the candidate set, or None
    when the candidate fails the finite signature criterion. The construction is
    re-enumerated before being returned."""
    cand = normalize_candidate(sets)
    verdict = decide_signature(cand, sigma, "finite")
    if verdict.answer != "yes":
        return None
    if sigma in ("cf", "nav"):
        witness = canonical_cf(cand)
    elif sigma in ("stb", "stg"):
        witness = canonical_stb(cand)
    elif sigma == "adm":
        witness = canonical_def(cand)
    elif sigma == "prf":
        witness = canonical_def(sort_extensions(set(cand) | {frozenset()}))
    elif sigma == "semi":
        witness = _prf_to_semi(canonical_def(sort_extensions(set(cand) | {frozenset()})))
    elif sigma in ("grd", "id", "eag"):
        witness = AF(cand[0], [])
    else:  # pragma: no cover
        raise AFError(sigma)
    got = extensions(witness, sigma)
    if got != cand:
        raise RealizationDefect(
            f"canonical {sigma} construction realized {got}, expected {cand}"
        )
    return witness


# -- compact / analytic classification -------------------------------------------


def _accepted_args(f: AF, sigma: str) -> frozenset[str]:
    return args_of(extensions(f, sigma))


def is_compact(f: AF, sigma: str) -> bool:
    """No rejected arguments: every argument occurs in some sigma-extension."""
    check_semantics(sigma)
    if sigma not in CLASSIFIABLE_SEMANTICS:
        raise AFError(f"compactness is not defined for semantics {sigma!r}")
    return _accepted_args(f, sigma) == f.args


def implicit_conflicts(f: AF, sigma: str) -> frozenset[frozenset[str]]:
    """Semantic conflicts with no attack in either direction; a rejected argument
    without a self-loop is an implicit conflict with itself."""
    check_semantics(sigma)
    if sigma not in CLASSIFIABLE_SEMANTICS:
        raise AFError(f"analyticity is not defined for semantics {sigma!r}")
    pairs = pairs_of(extensions(f, sigma))
    out: set[frozenset[str]] = set()
    for a in f.names:
        for b in f.names:
            if a > b:
                continue
            if _joint(pairs, a, b):
                continue
            if (a, b) in f.attacks or (b, a) in f.attacks:
                continue
            out.add(frozenset((a, b)))
    return frozenset(out)


def is_analytic(f: AF, sigma: str) -> bool:
    return not implicit_conflicts(f, sigma)
