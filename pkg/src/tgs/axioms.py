"""Exhaustive verification of the nesting axioms.

Three nestings of two applications with the mediator sequence
``alpha, beta, gamma, delta`` kept in order are compared::

    left   = [[A,alpha,B,beta,C],gamma,D,delta,E]
    middle = [A,alpha,[B,beta,C,gamma,D],delta,E]
    right  = [A,alpha,B,beta,[C,gamma,D,delta,E]]

``T1`` is ``middle == left``, ``T3a`` is ``right == left`` and ``T3b`` is
``left == middle``.  ``T3b`` is the same identity as ``T1`` with its sides
swapped; it is still swept on its own so every report stands alone.

Sweeps run in lexicographic order of ``(A,alpha,B,beta,C,gamma,D,delta,E)``
and are chunked by ``A`` so memory stays at ``n^4 m^4`` cells.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .core import FiniteTGS
from .errors import PreconditionError

__all__ = ["AxiomReport", "Counterexample", "check_t1", "check_t3", "check_all", "nestings"]

AXIOMS = ("T1", "T3a", "T3b")


@dataclass(frozen=True)
class Counterexample:
    args: Tuple[int, ...]  # (A, alpha, B, beta, C, gamma, D, delta, E)
    lhs: int
    rhs: int


@dataclass
class AxiomReport:
    axiom: str
    holds: bool
    violations: int
    counterexamples: List[Counterexample] = field(default_factory=list)

    def __bool__(self):
        return self.holds


def _grid(shape):
    """Broadcastable index arrays, one per axis of ``shape``."""
    nd = len(shape)
    out = []
    for k, size in enumerate(shape):
        s = [1] * nd
        s[k] = size
        out.append(np.arange(size).reshape(s))
    return out


def nestings(tgs: FiniteTGS, a: int):
    """The three nestings for fixed first argument ``a``.

    Each array has axes ``(alpha, B, beta, C, gamma, D, delta, E)``.
    """
    T = tgs.table
    n, m = tgs.n, tgs.m
    al, B, be, C, ga, D, de, E = _grid((m, n, m, n, m, n, m, n))
    left = T[T[a, al, B, be, C], ga, D, de, E]
    middle = T[a, al, T[B, be, C, ga, D], de, E]
    right = T[a, al, B, be, T[C, ga, D, de, E]]
    return left, middle, right


def _sweep(tgs: FiniteTGS, cap: int, pairs):
    """Run several identities in one pass; ``pairs`` maps axiom -> (lhs, rhs) selectors."""
    if cap < 0:
        raise PreconditionError("cap must be >= 0")
    found = {name: [] for name in pairs}
    counts = {name: 0 for name in pairs}
    for a in range(tgs.n):
        sides = dict(zip(("left", "middle", "right"), nestings(tgs, a)))
        for name, (lname, rname) in pairs.items():
            lhs, rhs = sides[lname], sides[rname]
            bad = lhs != rhs
            k = int(bad.sum())
            if not k:
                continue
            counts[name] += k
            room = cap - len(found[name])
            if room <= 0:
                continue
            # np.nonzero walks C order, which is lexicographic order here
            idx = np.nonzero(bad)
            for j in range(min(room, k)):
                rest = tuple(int(ix[j]) for ix in idx)
                found[name].append(
                    Counterexample((a,) + rest, int(lhs[rest]), int(rhs[rest])))
    return [AxiomReport(name, counts[name] == 0, counts[name], found[name]) for name in pairs]


def check_t1(tgs: FiniteTGS, cap: int = 10) -> AxiomReport:
    """``[A,a,[B,b,C,g,D],d,E] == [[A,a,B,b,C],g,D,d,E]`` for every tuple."""
    return _sweep(tgs, cap, {"T1": ("middle", "left")})[0]


def check_t3(tgs: FiniteTGS, cap: int = 10) -> Tuple[AxiomReport, AxiomReport]:
    """The two pairwise identities of the distributivity chain (T3a, T3b)."""
    t3a, t3b = _sweep(tgs, cap, {"T3a": ("right", "left"), "T3b": ("left", "middle")})
    return t3a, t3b


def check_all(tgs: FiniteTGS, cap: int = 10) -> List[AxiomReport]:
    """``[T1, T3a, T3b]`` from a single sweep; the system passes iff all hold."""
    return _sweep(tgs, cap, {
        "T1": ("middle", "left"),
        "T3a": ("right", "left"),
        "T3b": ("left", "middle"),
    })


def satisfies_axioms(tgs: FiniteTGS) -> bool:
    return all(r.holds for r in check_all(tgs, cap=0))
