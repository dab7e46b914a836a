"""Finite ternary Gamma-semirings and evaluation of the 5-ary operation.

A system has ``n`` states and ``m`` mediators, both addressed by dense
integer indices.  The operation ``[A, alpha, B, beta, C]`` is stored as an
``(n, m, n, m, n)`` array; flattening it in C order gives the canonical
A-major cell order used by the file format, the model finder and every
counterexample listing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .errors import PreconditionError

__all__ = [
    "FiniteTGS",
    "Leaf",
    "Node",
    "Term",
    "evaluate",
    "evaluate_term",
    "flatten_index",
    "unflatten_index",
]


def flatten_index(n, m, a, alpha, b, beta, c):
    """Position of the cell ``(a, alpha, b, beta, c)`` in the flat table."""
    return (((a * m + alpha) * n + b) * m + beta) * n + c


def unflatten_index(n, m, idx):
    """Inverse of :func:`flatten_index`."""
    idx, c = divmod(idx, n)
    idx, beta = divmod(idx, m)
    idx, b = divmod(idx, n)
    a, alpha = divmod(idx, m)
    return a, alpha, b, beta, c


def _check_names(names, what):
    names = tuple(str(x) for x in names)
    if not names:
        raise PreconditionError(f"a system needs at least one {what}")
    if any(not x for x in names):
        raise PreconditionError(f"{what} names must be nonempty")
    if len(set(names)) != len(names):
        raise PreconditionError(f"{what} names must be unique")
    return names


class FiniteTGS:
    """An immutable finite ternary Gamma-semiring (or candidate for one).

    ``table`` may be anything reshapeable to ``(n, m, n, m, n)``, including a
    flat sequence in flatten order.  The axioms are *not* checked here; use
    :func:`tgs.axioms.check_all`.
    """

    def __init__(self, states: Sequence[str], mediators: Sequence[str], table):
        self.states = _check_names(states, "state")
        self.mediators = _check_names(mediators, "mediator")
        n, m = len(self.states), len(self.mediators)
        arr = np.asarray(table)
        if arr.size != n ** 3 * m ** 2:
            raise PreconditionError(
                f"table has {arr.size} entries, expected n^3*m^2 = {n ** 3 * m ** 2}")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise PreconditionError("table entries must be state indices in [0, n)")
        arr = arr.reshape(n, m, n, m, n).astype(np.min_scalar_type(max(n - 1, 1)))
        arr.flags.writeable = False
        self.table = arr
        self._state_index = {s: i for i, s in enumerate(self.states)}
        self._mediator_index = {g: i for i, g in enumerate(self.mediators)}

    @classmethod
    def from_function(cls, states, mediators, op: Callable[[int, int, int, int, int], int]):
        """Build the table by calling ``op(a, alpha, b, beta, c)`` on every cell."""
        n, m = len(states), len(mediators)
        flat = [op(*unflatten_index(n, m, i)) for i in range(n ** 3 * m ** 2)]
        return cls(states, mediators, flat)

    @property
    def n(self) -> int:
        return len(self.states)

    @property
    def m(self) -> int:
        return len(self.mediators)

    @property
    def flat(self) -> np.ndarray:
        return self.table.reshape(-1)

    def state_index(self, name: str) -> int:
        try:
            return self._state_index[name]
        except KeyError:
            raise KeyError(f"unknown state {name!r}") from None

    def mediator_index(self, name: str) -> int:
        try:
            return self._mediator_index[name]
        except KeyError:
            raise KeyError(f"unknown mediator {name!r}") from None

    def has_state(self, name):
        return name in self._state_index

    def has_mediator(self, name):
        return name in self._mediator_index

    def __call__(self, a, alpha, b, beta, c):
        return evaluate(self, a, alpha, b, beta, c)

    def relabel(self, states=None, mediators=None) -> "FiniteTGS":
        """Same table under new display names."""
        return FiniteTGS(states or self.states, mediators or self.mediators, self.table)

    def __eq__(self, other):
        if not isinstance(other, FiniteTGS):
            return NotImplemented
        return (self.states == other.states and self.mediators == other.mediators
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.states, self.mediators, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteTGS(n={self.n}, m={self.m}, states={list(self.states)!r})"


def evaluate(tgs: FiniteTGS, a: int, alpha: int, b: int, beta: int, c: int) -> int:
    """Value of ``[a, alpha, b, beta, c]``."""
    n, m = tgs.n, tgs.m
    for x in (a, b, c):
        if not 0 <= x < n:
            raise IndexError(f"state index {x} out of range [0, {n})")
    for g in (alpha, beta):
        if not 0 <= g < m:
            raise IndexError(f"mediator index {g} out of range [0, {m})")
    return int(tgs.table[a, alpha, b, beta, c])


@dataclass(frozen=True)
class Leaf:
    element: int


@dataclass(frozen=True)
class Node:
    left: "Term"
    alpha: int
    mid: "Term"
    beta: int
    right: "Term"


Term = Union[Leaf, Node]


def evaluate_term(tgs: FiniteTGS, t: Term) -> int:
    if isinstance(t, Leaf):
        if not 0 <= t.element < tgs.n:
            raise IndexError(f"state index {t.element} out of range [0, {tgs.n})")
        return t.element
    return evaluate(tgs, evaluate_term(tgs, t.left), t.alpha,
                    evaluate_term(tgs, t.mid), t.beta,
                    evaluate_term(tgs, t.right))
