"""Reaction-closed sets, chemical ideals, Gamma-ideals, primeness and semiprimeness.

Every predicate works on the boolean array ``inside[A,alpha,B,beta,C]``
telling whether the cell's output lies in the subset, masked by a
positional premise.  Witnesses are the lexicographically first violating
``(A, alpha, B, beta, C)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, List, Optional

import numpy as np

from .core import FiniteTGS
from .errors import PredicateError, PreconditionError, SizeError
from .subsets import StateSubset

__all__ = [
    "IdealKind",
    "Verdict",
    "is_reaction_closed",
    "is_chemical_ideal",
    "is_gamma_ideal",
    "is_ideal",
    "is_prime",
    "is_semiprime",
    "generate_ideal",
    "enumerate_ideals",
    "ENUMERATION_BOUND",
]

ENUMERATION_BOUND = 16


class IdealKind(enum.Enum):
    REACTION_CLOSED = "reaction-closed"
    CHEMICAL = "chemical"
    LEFT = "left"
    RIGHT = "right"
    MIDDLE = "middle"
    TWO_SIDED = "two-sided"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip().lower().replace("_", "-"))
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown ideal kind {text!r} (choose from {choices})") from None


GAMMA_KINDS = (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.MIDDLE, IdealKind.TWO_SIDED)


@dataclass(frozen=True)
class Verdict:
    """Truthy outcome of a predicate.

    ``witness`` is a cell ``(A, alpha, B, beta, C)`` or a single state, and
    ``reason`` says which part of the definition failed.
    """
    holds: bool
    witness: Any = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.holds


_OK = Verdict(True)


def _positions(n):
    a = np.arange(n).reshape(n, 1, 1, 1, 1)
    b = np.arange(n).reshape(1, 1, n, 1, 1)
    c = np.arange(n).reshape(1, 1, 1, 1, n)
    return a, b, c


def _premise(tgs: FiniteTGS, mask: np.ndarray, kind: IdealKind) -> np.ndarray:
    """Cells whose output a ``kind``-ideal containing ``mask`` must absorb."""
    a, b, c = _positions(tgs.n)
    ma, mb, mc = mask[a], mask[b], mask[c]
    if kind is IdealKind.REACTION_CLOSED:
        p = ma & mb & mc
    elif kind is IdealKind.CHEMICAL:
        p = ma & mc
    elif kind is IdealKind.LEFT:
        p = ma
    elif kind is IdealKind.RIGHT:
        p = mc
    elif kind is IdealKind.MIDDLE:
        p = mb
    elif kind is IdealKind.TWO_SIDED:
        p = ma | mb | mc
    else:  # pragma: no cover
        raise ValueError(kind)
    return np.broadcast_to(p, tgs.table.shape)


def _first(cells: np.ndarray):
    flat = np.flatnonzero(cells)
    if not flat.size:
        return None
    return tuple(int(x) for x in np.unravel_index(flat[0], cells.shape))


def _nonempty(X: StateSubset, tgs: FiniteTGS):
    if X.owner is not tgs and X.owner != tgs:
        raise ValueError("subset belongs to a different system")
    if not X:
        raise PreconditionError("subset must be nonempty")


def _check(tgs, X, kind, reason):
    _nonempty(X, tgs)
    mask = X.mask
    bad = _premise(tgs, mask, kind) & ~mask[tgs.table]
    w = _first(bad)
    return _OK if w is None else Verdict(False, w, reason)


def is_reaction_closed(tgs: FiniteTGS, R: StateSubset) -> Verdict:
    """``[A,alpha,B,beta,C]`` stays in ``R`` whenever ``A, B, C`` are in ``R``."""
    return _check(tgs, R, IdealKind.REACTION_CLOSED, "not reaction-closed")


def is_chemical_ideal(tgs: FiniteTGS, I: StateSubset) -> Verdict:
    """Boundary absorption: ``[A,alpha,B,beta,C]`` in ``I`` for ``A, C`` in ``I`` and any ``B``.

    Internal closure is the special case ``B`` in ``I`` and needs no separate sweep.
    """
    return _check(tgs, I, IdealKind.CHEMICAL, "boundary absorption fails")


def is_gamma_ideal(tgs: FiniteTGS, J: StateSubset, kind: IdealKind) -> Verdict:
    if kind not in GAMMA_KINDS:
        raise ValueError(f"{kind} is not a Gamma-ideal kind")
    return _check(tgs, J, kind, f"{kind.value} absorption fails")


def is_ideal(tgs: FiniteTGS, X: StateSubset, kind: IdealKind) -> Verdict:
    """Dispatch on ``kind`` to the matching predicate."""
    if kind is IdealKind.REACTION_CLOSED:
        return is_reaction_closed(tgs, X)
    if kind is IdealKind.CHEMICAL:
        return is_chemical_ideal(tgs, X)
    return is_gamma_ideal(tgs, X, kind)


def is_prime(tgs: FiniteTGS, P: StateSubset) -> Verdict:
    """Proper chemical ideal that any cell landing in it has an argument in it.

    ``reason`` is one of ``"not a chemical ideal"``, ``"not proper"`` or
    ``"implication fails"``.
    """
    ideal = is_chemical_ideal(tgs, P)
    if not ideal:
        return Verdict(False, ideal.witness, "not a chemical ideal")
    if P.is_full():
        return Verdict(False, None, "not proper")
    mask = P.mask
    a, b, c = _positions(tgs.n)
    outside = ~mask[a] & ~mask[b] & ~mask[c]
    w = _first(mask[tgs.table] & outside)
    return _OK if w is None else Verdict(False, w, "implication fails")


def is_semiprime(tgs: FiniteTGS, I: StateSubset) -> Verdict:
    """No state outside ``I`` has all of its self-interactions inside ``I``.

    Raises :class:`PredicateError` if ``I`` is not a chemical ideal; the
    witness is the violating cell.
    """
    ideal = is_chemical_ideal(tgs, I)
    if not ideal:
        raise PredicateError(
            f"{I!r} is not a chemical ideal (boundary absorption fails at {ideal.witness})",
            ideal.witness)
    mask = I.mask
    for x in range(tgs.n):
        if mask[x]:
            continue
        if mask[tgs.table[x, :, x, :, x]].all():
            return Verdict(False, x, "self-interactions trapped")
    return _OK


def generate_ideal(tgs: FiniteTGS, seed: StateSubset, kind: IdealKind) -> StateSubset:
    """Least ``kind``-closed superset of ``seed``, by iterating to a fixpoint."""
    _nonempty(seed, tgs)
    mask = seed.mask.copy()
    for _ in range(tgs.n + 1):
        produced = np.zeros(tgs.n, dtype=bool)
        produced[tgs.table[_premise(tgs, mask, kind)]] = True
        grown = mask | produced
        if np.array_equal(grown, mask):
            return StateSubset.from_mask(tgs, mask)
        mask = grown
    raise AssertionError("closure did not stabilise")  # pragma: no cover


def enumerate_ideals(tgs: FiniteTGS, kind: IdealKind,
                     bound: int = ENUMERATION_BOUND) -> List[StateSubset]:
    """All nonempty ``kind``-ideals, ordered by bit mask (bit i = state i)."""
    if tgs.n > bound:
        raise SizeError(
            f"{tgs.n} states exceeds the enumeration bound {bound}; "
            "use generate_ideal for targeted closures")
    out = []
    for bits in range(1, 1 << tgs.n):
        X = StateSubset(tgs, bits)
        if is_ideal(tgs, X, kind):
            out.append(X)
    return out
