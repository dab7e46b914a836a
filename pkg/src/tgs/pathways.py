"""One-step mediated successors, reachability, witnessed pathways and trapping."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core import FiniteTGS, evaluate
from .errors import PredicateError, PreconditionError
from .ideals import IdealKind, Verdict, is_gamma_ideal
from .subsets import StateSubset

__all__ = [
    "Slot",
    "PathwayStep",
    "Pathway",
    "successors",
    "successor_matrix",
    "reachable",
    "find_pathway",
    "verify_trapping",
    "to_dot",
]


class Slot(enum.IntEnum):
    """Where the previous state sits in the application."""
    PREV_LEFT = 0    # [X, a, A, b, B]
    PREV_MIDDLE = 1  # [A, a, X, b, B]
    PREV_RIGHT = 2   # [A, a, B, b, X]


@dataclass(frozen=True)
class PathwayStep:
    slot: Slot
    companions: Tuple[int, int]
    mediators: Tuple[int, int]
    result: int

    def arguments(self, prev: int):
        """The full cell ``(A, alpha, B, beta, C)`` with ``prev`` placed in its slot."""
        p, q = self.companions
        al, be = self.mediators
        if self.slot is Slot.PREV_LEFT:
            return prev, al, p, be, q
        if self.slot is Slot.PREV_MIDDLE:
            return p, al, prev, be, q
        return p, al, q, be, prev

    def is_valid(self, tgs: FiniteTGS, prev: int) -> bool:
        return evaluate(tgs, *self.arguments(prev)) == self.result


@dataclass(frozen=True)
class Pathway:
    source: int
    steps: Tuple[PathwayStep, ...]

    @property
    def target(self) -> int:
        return self.steps[-1].result

    @property
    def states(self):
        return (self.source,) + tuple(s.result for s in self.steps)

    def __len__(self):
        return len(self.steps)

    def is_valid(self, tgs: FiniteTGS) -> bool:
        if not self.steps:
            return False
        prev = self.source
        for step in self.steps:
            if not step.is_valid(tgs, prev):
                return False
            prev = step.result
        return True


def _slot_views(tgs: FiniteTGS, x: int):
    """Per slot, the outputs with ``x`` fixed there; axes are the other four
    arguments in their cell order."""
    T = tgs.table
    return T[x], T[:, :, x], T[:, :, :, :, x]


def _unpack(slot, idx):
    """Map a view index back to ``(companions, mediators)``."""
    if slot is Slot.PREV_LEFT:
        al, p, be, q = idx
    elif slot is Slot.PREV_MIDDLE:
        p, al, be, q = idx
    else:
        p, al, q, be = idx
    return (int(p), int(q)), (int(al), int(be))


def successor_matrix(tgs: FiniteTGS) -> np.ndarray:
    """``M[x, y]`` is true iff ``y`` is one mediated step from ``x``."""
    n = tgs.n
    M = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for view in _slot_views(tgs, x):
            M[x, view.ravel()] = True
    return M


def successors(tgs: FiniteTGS, x: int) -> StateSubset:
    if not 0 <= x < tgs.n:
        raise IndexError(f"state index {x} out of range [0, {tgs.n})")
    row = np.zeros(tgs.n, dtype=bool)
    for view in _slot_views(tgs, x):
        row[view.ravel()] = True
    return StateSubset.from_mask(tgs, row)


def reachable(tgs: FiniteTGS, sources: StateSubset) -> StateSubset:
    """Least superset of ``sources`` closed under :func:`successors`."""
    if not sources:
        raise PreconditionError("sources must be nonempty")
    M = successor_matrix(tgs)
    seen = sources.mask.copy()
    frontier = seen.copy()
    while frontier.any():
        nxt = M[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return StateSubset.from_mask(tgs, seen)


def _first_step(tgs, x, wanted):
    """Canonical first step from ``x`` to each state in ``wanted`` it can reach.

    Steps are ordered by slot, then by the flatten order of the cell.
    """
    found = {}
    for slot, view in zip(Slot, _slot_views(tgs, x)):
        flat = view.ravel()
        for y in wanted:
            if y in found:
                continue
            hits = np.flatnonzero(flat == y)
            if hits.size:
                comp, med = _unpack(slot, np.unravel_index(hits[0], view.shape))
                found[y] = PathwayStep(slot, comp, med, y)
    return found


def find_pathway(tgs: FiniteTGS, src: int, tgt: int, max_len: int) -> Optional[Pathway]:
    """Shortest witnessed pathway from ``src`` to ``tgt`` with at most ``max_len`` steps.

    Breadth-first; within a layer the frontier is scanned in index order and
    each state keeps the first step that discovered it.  Returns ``None``
    when no pathway of length ``1..max_len`` exists.
    """
    if max_len < 1:
        raise PreconditionError("max_len must be >= 1")
    for x in (src, tgt):
        if not 0 <= x < tgs.n:
            raise IndexError(f"state index {x} out of range [0, {tgs.n})")
    M = successor_matrix(tgs)
    # parent[y] = (prev, layer of prev, step); src is not marked seen so a
    # cycle back to it counts as a pathway
    parent = {}
    frontier = [src]
    for layer in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            wanted = [int(y) for y in np.flatnonzero(M[x]) if y not in parent]
            wanted = [y for y in wanted if y not in nxt]
            if not wanted:
                continue
            steps = _first_step(tgs, x, wanted)
            for y in wanted:
                parent[y] = (x, layer - 1, steps[y])
                nxt.append(y)
        if tgt in parent:
            chain = []
            y = tgt
            while True:
                prev, prev_layer, step = parent[y]
                chain.append(step)
                if prev_layer == 0:
                    break
                y = prev
            return Pathway(src, tuple(reversed(chain)))
        if not nxt:
            return None
        frontier = sorted(nxt)
    return None


def verify_trapping(tgs: FiniteTGS, J: StateSubset) -> Verdict:
    """Check that nothing reachable from a two-sided Gamma-ideal leaves it.

    The witness is ``(x, y)`` with ``x`` in ``J`` and ``y`` reachable but
    outside.  A two-sided Gamma-ideal should never produce one.
    """
    ideal = is_gamma_ideal(tgs, J, IdealKind.TWO_SIDED)
    if not ideal:
        raise PredicateError(
            f"{J!r} is not a two-sided Gamma-ideal (fails at {ideal.witness})", ideal.witness)
    for x in J:
        escaped = reachable(tgs, StateSubset.of(tgs, [x])) - J
        if escaped:
            return Verdict(False, (x, escaped.members[0]), "pathway escapes")
    return Verdict(True)


def _dot_id(s):
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', '\\"'))


def to_dot(tgs: FiniteTGS, source: int) -> str:
    """DOT digraph of the successor relation restricted to states reachable from ``source``."""
    keep = reachable(tgs, StateSubset.of(tgs, [source]))
    M = successor_matrix(tgs)
    lines = ["digraph successors {"]
    for x in keep:
        shape = "doublecircle" if x == source else "circle"
        lines.append(f"  {_dot_id(tgs.states[x])} [shape={shape}];")
    for x in keep:
        for y in keep:
            if M[x, y]:
                lines.append(f"  {_dot_id(tgs.states[x])} -> {_dot_id(tgs.states[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
