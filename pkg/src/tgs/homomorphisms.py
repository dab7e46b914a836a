"""Structure-preserving maps between two systems over the same mediators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional

import numpy as np

from .core import FiniteTGS
from .errors import PreconditionError, SizeError, StructuralError
from .ideals import IdealKind, Verdict, enumerate_ideals, is_chemical_ideal, is_ideal
from .model_finder import enumerate_models
from .pathways import Pathway, PathwayStep
from .subsets import StateSubset

__all__ = [
    "StateMap",
    "ImageReport",
    "ImageCounterexample",
    "is_homomorphism",
    "compose",
    "image",
    "enumerate_homomorphisms",
    "iter_homomorphisms",
    "check_image_preservation",
    "find_image_counterexample",
    "map_pathway",
    "HOM_BUDGET",
]

HOM_BUDGET = 10_000_000


@dataclass(frozen=True)
class StateMap:
    domain: FiniteTGS
    codomain: FiniteTGS
    mapping: tuple

    def __post_init__(self):
        if self.domain.mediators != self.codomain.mediators:
            raise StructuralError(
                "domain and codomain must share the same mediator list "
                f"({list(self.domain.mediators)} != {list(self.codomain.mediators)})")
        mapping = tuple(int(x) for x in self.mapping)
        if len(mapping) != self.domain.n:
            raise PreconditionError(
                f"map has {len(mapping)} entries, domain has {self.domain.n} states")
        if any(not 0 <= y < self.codomain.n for y in mapping):
            raise PreconditionError("map values must be codomain state indices")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, tgs: FiniteTGS) -> "StateMap":
        return cls(tgs, tgs, tuple(range(tgs.n)))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.n


def is_homomorphism(f: StateMap) -> Verdict:
    """``f([A,a,B,b,C]) == [f(A),a,f(B),b,f(C)]'`` for every cell; witness is the first failing cell."""
    S, S2 = f.domain, f.codomain
    fm = np.asarray(f.mapping)
    n, m = S.n, S.m
    A = fm.reshape(n, 1, 1, 1, 1)
    B = fm.reshape(1, 1, n, 1, 1)
    C = fm.reshape(1, 1, 1, 1, n)
    al = np.arange(m).reshape(1, m, 1, 1, 1)
    be = np.arange(m).reshape(1, 1, 1, m, 1)
    bad = fm[S.table] != S2.table[A, al, B, be, C]
    hit = np.flatnonzero(bad)
    if not hit.size:
        return Verdict(True)
    w = tuple(int(x) for x in np.unravel_index(hit[0], bad.shape))
    return Verdict(False, w, "does not commute with the operation")


def compose(f: StateMap, g: StateMap) -> StateMap:
    """``g after f``."""
    if f.codomain is not g.domain and f.codomain != g.domain:
        raise StructuralError("codomain of f is not the domain of g")
    return StateMap(f.domain, g.codomain, tuple(g.mapping[y] for y in f.mapping))


def image(f: StateMap, X: StateSubset) -> StateSubset:
    return StateSubset.of(f.codomain, {f.mapping[x] for x in X})


def enumerate_homomorphisms(S: FiniteTGS, S2: FiniteTGS,
                            budget: int = HOM_BUDGET) -> List[StateMap]:
    """All homomorphisms ``S -> S2`` in lexicographic order of the mapping.

    States are assigned in index order; once ``f(0..k)`` is fixed, every
    cell whose three arguments and output are all ``<= k`` is checked.
    ``budget`` bounds the number of partial assignments tried.
    """
    return list(iter_homomorphisms(S, S2, budget))


def iter_homomorphisms(S: FiniteTGS, S2: FiniteTGS,
                       budget: int = HOM_BUDGET) -> Iterator[StateMap]:
    if S.mediators != S2.mediators:
        raise StructuralError("systems must share the same mediator list")
    n, n2 = S.n, S2.n
    g = np.indices(S.table.shape).reshape(5, -1)
    out = S.table.reshape(-1).astype(np.int64)
    level = np.maximum.reduce([g[0], g[2], g[4], out])
    checks = []
    for k in range(n):
        sel = level == k
        checks.append((g[0][sel], g[1][sel], g[2][sel], g[3][sel], g[4][sel], out[sel]))
    T2 = S2.table
    f = np.zeros(n, dtype=np.int64)
    nodes = 0

    def consistent(k):
        a, al, b, be, c, d = checks[k]
        return bool(np.all(f[d] == T2[f[a], al, f[b], be, f[c]]))

    def extend(k):
        nonlocal nodes
        for y in range(n2):
            nodes += 1
            if nodes > budget:
                raise SizeError(f"homomorphism search exceeded its budget of {budget} nodes")
            f[k] = y
            if not consistent(k):
                continue
            if k + 1 == n:
                yield StateMap(S, S2, tuple(f))
            else:
                yield from extend(k + 1)

    yield from extend(0)


@dataclass(frozen=True)
class ImageReport:
    input_kind_holds: bool
    image_kind_holds: bool
    surjective: bool


def check_image_preservation(f: StateMap, X: StateSubset, kind: IdealKind) -> ImageReport:
    """Evaluate ``kind`` on ``X`` and on ``f(X)``; reports, does not assert."""
    if X.owner is not f.domain and X.owner != f.domain:
        raise PreconditionError("subset must live in the map's domain")
    return ImageReport(
        bool(is_ideal(f.domain, X, kind)),
        bool(is_ideal(f.codomain, image(f, X), kind)),
        f.is_surjective(),
    )


@dataclass(frozen=True)
class ImageCounterexample:
    """A chemical ideal whose image under a homomorphism is not a chemical ideal."""
    domain: FiniteTGS
    codomain: FiniteTGS
    f: StateMap
    ideal: StateSubset
    failure: tuple  # first cell of the codomain breaking boundary absorption


def find_image_counterexample(max_states: int = 3, max_mediators: int = 1,
                              surjective_only: bool = False) -> Optional[ImageCounterexample]:
    """Search small model pairs for a chemical ideal with a non-ideal image.

    Order: mediator count, domain size, domain model, codomain size,
    codomain model, homomorphism, ideal; models in finder order.  Model
    lists are produced lazily, so a hit among small systems never triggers
    the larger enumerations.
    """
    cache = {}

    def models(n, m):
        if (n, m) not in cache:
            cache[n, m] = list(enumerate_models(n, m))
        return cache[n, m]

    for m in range(1, max_mediators + 1):
        for n in range(1, max_states + 1):
            for S in models(n, m):
                ideals = enumerate_ideals(S, IdealKind.CHEMICAL)
                for n2 in range(1, max_states + 1):
                    for S2 in models(n2, m):
                        for f in iter_homomorphisms(S, S2):
                            if surjective_only and not f.is_surjective():
                                continue
                            for I in ideals:
                                v = is_chemical_ideal(S2, image(f, I))
                                if not v:
                                    return ImageCounterexample(S, S2, f, I, v.witness)
    return None


def map_pathway(f: StateMap, p: Pathway) -> Pathway:
    """Push a pathway through ``f``: states and companions mapped, mediators and slots kept."""
    steps = tuple(
        PathwayStep(s.slot, (f(s.companions[0]), f(s.companions[1])), s.mediators, f(s.result))
        for s in p.steps)
    return Pathway(f(p.source), steps)
