"""File formats: APX and TGF for frameworks, a line format for extension-sets,
and a small declarative format for finite logics.

All emitters produce UTF-8 text with LF endings and canonical (sorted) order, so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import re
from typing import Iterable

from .core import AF, RESERVED_PREFIX, check_arg_name
from .charlogic import FiniteLogic, make_logic
from .semantics import ExtensionSet, sort_extensions


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_APX_ARG = re.compile(r"arg\(\s*([A-Za-z0-9_]+)\s*\)\.\Z")
_APX_ATT = re.compile(r"att\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\.\Z")


def _check_user_name(name: str, lineno: int, col: int) -> str:
    check_arg_name(name)
    if name.startswith(RESERVED_PREFIX):
        raise ParseError(f"argument names starting with '_' are reserved: {name!r}", lineno, col)
    return name


def parse_apx(text: str) -> AF:
    args: list[str] = []
    attacks: list[tuple[str, str]] = []
    declared: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        m = _APX_ARG.match(line)
        if m:
            name = _check_user_name(m.group(1), lineno, raw.find(m.group(1)) + 1)
            declared.add(name)
            args.append(name)
            continue
        m = _APX_ATT.match(line)
        if m:
            a = _check_user_name(m.group(1), lineno, raw.find(m.group(1)) + 1)
            b = _check_user_name(m.group(2), lineno, raw.find(m.group(2)) + 1)
            for x in (a, b):
                if x not in declared:
                    raise ParseError(f"attack endpoint {x!r} not declared as arg", lineno)
            attacks.append((a, b))
            continue
        raise ParseError(f"cannot parse statement: {line!r}", lineno)
    return AF(args, attacks)


def emit_apx(f: AF) -> str:
    lines = [f"arg({a})." for a in f.names]
    lines += [f"att({a},{b})." for a, b in sorted(f.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_tgf(text: str) -> AF:
    names: dict[str, str] = {}
    attacks: list[tuple[str, str]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        parts = line.split()
        if not in_edges:
            if len(parts) == 1:
                node, label = parts[0], parts[0]
            elif len(parts) == 2:
                node, label = parts
            else:
                raise ParseError(f"cannot parse node line: {line!r}", lineno)
            if node in names:
                raise ParseError(f"duplicate node id {node!r}", lineno)
            if label in names.values():
                raise ParseError(f"duplicate node label {label!r}", lineno)
            names[node] = _check_user_name(label, lineno, 1)
        else:
            if len(parts) != 2:
                raise ParseError(f"cannot parse edge line: {line!r}", lineno)
            src, dst = parts
            for x in (src, dst):
                if x not in names:
                    raise ParseError(f"edge endpoint {x!r} not declared", lineno)
            attacks.append((names[src], names[dst]))
    return AF(names.values(), attacks)


def emit_tgf(f: AF) -> str:
    ids = {a: str(i + 1) for i, a in enumerate(f.names)}
    lines = [f"{ids[a]} {a}" for a in f.names]
    lines.append("#")
    lines += [f"{ids[a]} {ids[b]}" for a, b in sorted(f.attacks)]
    return "\n".join(lines) + "\n"


def parse_af(text: str, fmt: str) -> AF:
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise ValueError(f"unknown framework format: {fmt!r}")


def emit_af(f: AF, fmt: str) -> str:
    if fmt == "apx":
        return emit_apx(f)
    if fmt == "tgf":
        return emit_tgf(f)
    raise ValueError(f"unknown framework format: {fmt!r}")


# -- extension-set documents -----------------------------------------------------


def parse_extension_set(text: str) -> ExtensionSet:
    """One extension per line, arguments comma-separated, '-' for the empty
    extension, '#' starts a comment."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "-":
            sets.append(frozenset())
            continue
        members = [tok.strip() for tok in line.split(",")]
        for tok in members:
            if not tok:
                raise ParseError("empty argument name", lineno)
            _check_user_name(tok, lineno, 1)
        sets.append(frozenset(members))
    return sort_extensions(sets)


def emit_extension_set(sets: Iterable[frozenset[str]]) -> str:
    lines = []
    for s in sort_extensions(sets):
        lines.append(",".join(sorted(s)) if s else "-")
    return "\n".join(lines) + ("\n" if lines else "")


# -- logic description files ------------------------------------------------------

_MODELS_RE = re.compile(r"models\(\s*(.*?)\s*\)\s*=\s*\{(.*?)\}\s*\Z")


def parse_logic(text: str) -> FiniteLogic:
    """Declarative logic description::

        atoms a, b
        interpretations 1, 2
        models({}) = {1, 2}
        models(a) = {1}
        models(a,b) = {}

    The models lines must cover every theory of the language exactly once.
    """
    atoms: list[str] | None = None
    interps: list[str] | None = None
    table: dict[frozenset[str], frozenset[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("atoms"):
            if atoms is not None:
                raise ParseError("duplicate atoms line", lineno)
            atoms = [t for t in re.split(r"[,\s]+", line[len("atoms"):].strip()) if t]
            continue
        if line.startswith("interpretations"):
            if interps is not None:
                raise ParseError("duplicate interpretations line", lineno)
            interps = [
                t for t in re.split(r"[,\s]+", line[len("interpretations"):].strip()) if t
            ]
            continue
        m = _MODELS_RE.match(line)
        if m:
            if atoms is None or interps is None:
                raise ParseError("models line before atoms/interpretations", lineno)
            theory_txt = m.group(1)
            theory = (
                frozenset()
                if theory_txt in ("", "{}")
                else frozenset(t.strip() for t in theory_txt.split(","))
            )
            for a in theory:
                if a not in atoms:
                    raise ParseError(f"unknown atom {a!r}", lineno)
            ids_txt = m.group(2).strip()
            ids = frozenset() if not ids_txt else frozenset(t.strip() for t in ids_txt.split(","))
            for i in ids:
                if i not in interps:
                    raise ParseError(f"unknown interpretation {i!r}", lineno)
            if theory in table:
                raise ParseError(f"duplicate models line for theory", lineno)
            table[theory] = ids
            continue
        raise ParseError(f"cannot parse line: {line!r}", lineno)
    if atoms is None:
        raise ParseError("missing atoms line", 1)
    if interps is None:
        raise ParseError("missing interpretations line", 1)
    return make_logic(atoms, interps, table)


def emit_logic(logic: FiniteLogic) -> str:
    lines = ["atoms " + ", ".join(logic.atoms)]
    lines.append("interpretations " + ", ".join(logic.interpretations))
    for t in logic.theories:
        theory_txt = ",".join(sorted(t)) if t else "{}"
        ids = ", ".join(sorted(logic.table[t]))
        lines.append(f"models({theory_txt}) = {{{ids}}}")
    return "\n".join(lines) + "\n"
