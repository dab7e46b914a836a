"""Backtracking search for finite models of the nesting axioms.

Cells are assigned in flatten order.  An *axiom instance* is one tuple
``(A,alpha,B,beta,C,gamma,D,delta,E)``; evaluating its three nestings needs
six cell lookups, three of them at positions fixed by the tuple and three
at positions that depend on the inner values.  After cell ``p`` is
assigned, only instances that could look up ``p`` are re-checked; an
instance is judged as soon as all lookups of one of its identities are
assigned.  A partial table is pruned only when some judged instance fails.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .core import FiniteTGS
from .errors import BudgetExceeded, PreconditionError

__all__ = [
    "SearchSpec",
    "DEFAULT_BUDGET",
    "enumerate_models",
    "count_models",
    "sample_model",
    "run_search",
    "violated_instance",
    "default_names",
]

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class SearchSpec:
    n: int
    m: int
    mode: str = "count"  # count | emit | sample
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise PreconditionError("n and m must be >= 1")
        if self.budget <= 0:
            raise PreconditionError("budget must be > 0")
        if self.mode not in ("count", "emit", "sample"):
            raise PreconditionError(f"unknown mode {self.mode!r}")


def default_names(n, m):
    return [f"S{i}" for i in range(n)], [f"g{i}" for i in range(m)]


class _Instances:
    """Index arrays describing every axiom instance for sizes ``(n, m)``."""

    def __init__(self, n, m):
        self.n, self.m = n, m
        self.size = n ** 3 * m ** 2
        g = np.indices((n, m, n, m, n, m, n, m, n)).reshape(9, -1)
        A, al, B, be, C, ga, D, de, E = g

        def flat(a, x, b, y, c):
            return (((a * m + x) * n + b) * m + y) * n + c

        zero = np.zeros_like(A)
        self.inner_mid = flat(B, be, C, ga, D)
        self.inner_left = flat(A, al, B, be, C)
        self.inner_right = flat(C, ga, D, de, E)
        self.base_mid, self.stride_mid = flat(A, al, zero, de, E), n * m
        self.base_left, self.stride_left = flat(zero, ga, D, de, E), n * n * m * m
        self.base_right, self.stride_right = flat(A, al, B, be, zero), 1
        self.args = g.T

        # instances that could look up each cell
        touch = [self.inner_mid, self.inner_left, self.inner_right]
        for base, stride in ((self.base_mid, self.stride_mid),
                             (self.base_left, self.stride_left),
                             (self.base_right, self.stride_right)):
            for v in range(n):
                touch.append(base + v * stride)
        cells = np.concatenate(touch)
        ids = np.tile(np.arange(A.size), len(touch))
        order = np.lexsort((ids, cells))
        cells, ids = cells[order], ids[order]
        bounds = np.searchsorted(cells, np.arange(self.size + 1))
        self.candidates = []
        for p in range(self.size):
            self.candidates.append(np.unique(ids[bounds[p]:bounds[p + 1]]))

    def first_violation(self, tab, which=None):
        """First judged-and-failing instance id among ``which``, else ``None``.

        ``tab`` has ``size + 1`` entries; the last is a sentinel ``-1`` and
        unassigned cells hold ``-1``.
        """
        if which is None:
            which = slice(None)
        sentinel = self.size
        v_mid = tab[self.inner_mid[which]]
        v_left = tab[self.inner_left[which]]
        v_right = tab[self.inner_right[which]]
        mid = tab[np.where(v_mid >= 0, self.base_mid[which] + v_mid * self.stride_mid, sentinel)]
        left = tab[np.where(v_left >= 0, self.base_left[which] + v_left * self.stride_left, sentinel)]
        right = tab[np.where(v_right >= 0, self.base_right[which] + v_right * self.stride_right,
                             sentinel)]
        known_left = left >= 0
        bad = known_left & (((mid >= 0) & (mid != left)) | ((right >= 0) & (right != left)))
        hit = np.flatnonzero(bad)
        if not hit.size:
            return None
        if isinstance(which, slice):
            return int(hit[0])
        return int(which[hit[0]])


@lru_cache(maxsize=16)
def _instances(n, m):
    return _Instances(n, m)


def violated_instance(n, m, flat_table) -> Optional[tuple]:
    """First axiom instance (9-tuple) failing on a complete or partial table.

    Unassigned cells are ``-1``.  Used to re-check pruning decisions.
    """
    inst = _instances(n, m)
    tab = np.append(np.asarray(flat_table, dtype=np.int64), -1)
    k = inst.first_violation(tab)
    return None if k is None else tuple(int(x) for x in inst.args[k])


def _search(n, m, budget, order=None, node_limit=None, on_prune=None):
    """Depth-first search yielding complete flat tables.

    ``order(p)`` gives the value order for cell ``p`` (default ascending).
    ``on_prune(partial, instance)`` is called with a copy of the rejected
    partial table and the 9-tuple that failed.
    Raises :class:`BudgetExceeded` after ``budget`` assignments, or returns
    quietly after ``node_limit`` assignments (used for restarts).  The
    generator's return value is the node count.
    """
    inst = _instances(n, m)
    size = inst.size
    tab = np.full(size + 1, -1, dtype=np.int64)
    default = list(range(n))
    stack = [iter(order(0) if order else default)]
    nodes = 0
    while stack:
        p = len(stack) - 1
        for v in stack[-1]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted", progress=nodes)
            if node_limit is not None and nodes > node_limit:
                return nodes
            tab[p] = v
            bad = inst.first_violation(tab, inst.candidates[p])
            if bad is None:
                break
            if on_prune is not None:
                on_prune(tab[:size].copy(), tuple(int(x) for x in inst.args[bad]))
        else:
            tab[p] = -1
            stack.pop()
            continue
        if p + 1 == size:
            yield tab[:size].copy()
        else:
            stack.append(iter(order(p + 1) if order else default))
    return nodes


def enumerate_models(n: int, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[FiniteTGS]:
    """Every model on ``n`` states and ``m`` mediators, in lexicographic table order.

    Labelled models: no isomorphism reduction.  Raises
    :class:`BudgetExceeded` (progress = models emitted so far) when the node
    budget runs out.
    """
    SearchSpec(n, m, "emit", budget=budget)
    states, mediators = default_names(n, m)
    emitted = 0
    try:
        for flat in _search(n, m, budget):
            emitted += 1
            yield FiniteTGS(states, mediators, flat)
    except BudgetExceeded as e:
        raise BudgetExceeded(f"{e} after {emitted} models", progress=emitted) from None


def count_models(n: int, m: int, budget: int = DEFAULT_BUDGET) -> int:
    SearchSpec(n, m, "count", budget=budget)
    count = 0
    try:
        for _ in _search(n, m, budget):
            count += 1
    except BudgetExceeded as e:
        raise BudgetExceeded(f"{e} after {count} models", progress=count) from None
    return count


def sample_model(spec: SearchSpec) -> Optional[FiniteTGS]:
    """Randomised search with restarts; deterministic for a given ``(seed, budget)``.

    Restart ``r`` orders each cell's values by a fresh permutation and gives
    up after ``64 * 2**r`` assignments.  Returns ``None`` if the budget runs
    out first.
    """
    n, m = spec.n, spec.m
    rng = np.random.default_rng(spec.seed)
    spent = 0
    limit = 64
    while spent < spec.budget:
        allowed = min(limit, spec.budget - spent)
        gen = _search(n, m, allowed + 1, order=lambda p: rng.permutation(n).tolist(),
                      node_limit=allowed)
        try:
            flat = next(gen)
        except StopIteration as stop:
            if stop.value <= allowed:
                return None  # search space exhausted: no model exists
            spent += allowed
            limit *= 2
            continue
        states, mediators = default_names(n, m)
        return FiniteTGS(states, mediators, flat)
    return None


def run_search(spec: SearchSpec):
    """Dispatch on ``spec.mode``: an int, an iterator of models, or an optional model."""
    if spec.mode == "count":
        return count_models(spec.n, spec.m, spec.budget)
    if spec.mode == "emit":
        return enumerate_models(spec.n, spec.m, spec.budget)
    return sample_model(spec)
