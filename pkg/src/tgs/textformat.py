"""The ``tgs v1`` text format and the ``name -> name`` map format.

A system document::

    tgs v1
    states: S0 S1
    mediators: g0
    op:
    S0 g0 S0 g0 S0 -> S0
    ...

``#`` starts a comment, blank lines are ignored, and op lines may appear in
any order as long as every cell appears exactly once.  Serialisation sorts
op lines by flatten order, which is the canonical form.
"""
from __future__ import annotations

import re
from typing import Iterable, List, Tuple

from .core import FiniteTGS, flatten_index, unflatten_index
from .errors import (BadVersion, DuplicateTuple, MissingTuple, ParseError,
                     UnknownName)
from .homomorphisms import StateMap
from .subsets import StateSubset

__all__ = ["parse_tgs", "serialize_tgs", "parse_map", "serialize_map", "parse_subset",
           "VERSION"]

VERSION = "tgs v1"
_NAME = re.compile(r"[^\s,#]+")


def _lines(text: str) -> Iterable[Tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(item, key):
    if item is None:
        raise ParseError(f"expected '{key}:' line, found end of input")
    no, line = item
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != key:
        raise ParseError(f"expected '{key}:' line, found {line!r}", no)
    names = rest.split()
    if key != "op" and not names:
        raise ParseError(f"'{key}:' declares no names", no)
    for name in names:
        if not _NAME.fullmatch(name) or "->" in name:
            raise ParseError(f"invalid name {name!r}", no)
    if len(set(names)) != len(names):
        raise ParseError(f"duplicate name in '{key}:' line", no)
    return no, names


def parse_tgs(text: str) -> FiniteTGS:
    """Parse a ``tgs v1`` document.

    Raises :class:`BadVersion`, :class:`UnknownName`, :class:`DuplicateTuple`
    or :class:`MissingTuple` (all :class:`ParseError`), plus plain
    :class:`ParseError` for other syntax problems.
    """
    lines = _lines(text)
    first = next(lines, None)
    if first is None or " ".join(first[1].split()) != VERSION:
        raise BadVersion(f"first line must be {VERSION!r}", first[0] if first else 1)
    _, states = _header(next(lines, None), "states")
    _, mediators = _header(next(lines, None), "mediators")
    op_no, rest = _header(next(lines, None), "op")
    if rest:
        raise ParseError("'op:' line takes no arguments", op_no)

    sidx = {s: i for i, s in enumerate(states)}
    midx = {g: i for i, g in enumerate(mediators)}
    n, m = len(states), len(mediators)
    table = [None] * (n ** 3 * m ** 2)
    seen_at = {}
    for no, line in lines:
        lhs, arrow, rhs = line.partition("->")
        args, out = lhs.split(), rhs.split()
        if not arrow or len(args) != 5 or len(out) != 1:
            raise ParseError(f"expected 'A a B b C -> D', found {line!r}", no)
        idx = []
        for pos, tok in enumerate(args):
            lookup = midx if pos % 2 else sidx
            if tok not in lookup:
                kind = "mediator" if pos % 2 else "state"
                raise UnknownName(f"unknown {kind} {tok!r}", no)
            idx.append(lookup[tok])
        if out[0] not in sidx:
            raise UnknownName(f"unknown state {out[0]!r}", no)
        cell = flatten_index(n, m, *idx)
        if table[cell] is not None:
            raise DuplicateTuple(
                f"duplicate tuple {' '.join(args)} (first given on line {seen_at[cell]})", no)
        table[cell] = sidx[out[0]]
        seen_at[cell] = no
    for cell, v in enumerate(table):
        if v is None:
            a, x, b, y, c = unflatten_index(n, m, cell)
            raise MissingTuple(
                f"missing tuple {states[a]} {mediators[x]} {states[b]} {mediators[y]} {states[c]}"
                f" in op section starting on line {op_no}", op_no)
    return FiniteTGS(states, mediators, table)


def serialize_tgs(tgs: FiniteTGS) -> str:
    S, G = tgs.states, tgs.mediators
    out = [VERSION, "states: " + " ".join(S), "mediators: " + " ".join(G), "op:"]
    for cell, d in enumerate(tgs.flat.tolist()):
        a, x, b, y, c = unflatten_index(tgs.n, tgs.m, cell)
        out.append(f"{S[a]} {G[x]} {S[b]} {G[y]} {S[c]} -> {S[d]}")
    return "\n".join(out) + "\n"


def parse_map(text: str, domain: FiniteTGS, codomain: FiniteTGS) -> StateMap:
    """One ``name -> name`` line per domain state, in any order."""
    mapping = {}
    for no, line in _lines(text):
        lhs, arrow, rhs = line.partition("->")
        src, dst = lhs.split(), rhs.split()
        if not arrow or len(src) != 1 or len(dst) != 1:
            raise ParseError(f"expected 'name -> name', found {line!r}", no)
        if not domain.has_state(src[0]):
            raise UnknownName(f"unknown domain state {src[0]!r}", no)
        if not codomain.has_state(dst[0]):
            raise UnknownName(f"unknown codomain state {dst[0]!r}", no)
        i = domain.state_index(src[0])
        if i in mapping:
            raise DuplicateTuple(f"state {src[0]!r} mapped twice", no)
        mapping[i] = codomain.state_index(dst[0])
    for i, name in enumerate(domain.states):
        if i not in mapping:
            raise MissingTuple(f"no image given for domain state {name!r}")
    return StateMap(domain, codomain, tuple(mapping[i] for i in range(domain.n)))


def serialize_map(f: StateMap) -> str:
    return "".join(f"{f.domain.states[i]} -> {f.codomain.states[y]}\n"
                   for i, y in enumerate(f.mapping))


def parse_subset(tgs: FiniteTGS, text: str) -> StateSubset:
    """Comma-separated state names, e.g. ``S0,S2,S4``."""
    names: List[str] = [t.strip() for t in text.split(",") if t.strip()]
    for name in names:
        if not tgs.has_state(name):
            raise UnknownName(f"unknown state {name!r}")
    return StateSubset.from_names(tgs, names)
