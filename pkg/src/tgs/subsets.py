"""Subsets of a system's carrier, stored as an integer bit mask (bit i = state i)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .core import FiniteTGS

__all__ = ["StateSubset"]


@dataclass(frozen=True)
class StateSubset:
    owner: FiniteTGS
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.owner.n:
            raise ValueError(f"bit mask {self.bits:#x} does not fit {self.owner.n} states")

    @classmethod
    def of(cls, owner: FiniteTGS, indices: Iterable[int]) -> "StateSubset":
        bits = 0
        for i in indices:
            if not 0 <= i < owner.n:
                raise IndexError(f"state index {i} out of range [0, {owner.n})")
            bits |= 1 << int(i)
        return cls(owner, bits)

    @classmethod
    def from_names(cls, owner: FiniteTGS, names: Iterable[str]) -> "StateSubset":
        return cls.of(owner, (owner.state_index(x) for x in names))

    @classmethod
    def from_mask(cls, owner: FiniteTGS, mask) -> "StateSubset":
        return cls.of(owner, np.flatnonzero(np.asarray(mask, dtype=bool)))

    @classmethod
    def full(cls, owner: FiniteTGS) -> "StateSubset":
        return cls(owner, (1 << owner.n) - 1)

    @classmethod
    def empty(cls, owner: FiniteTGS) -> "StateSubset":
        return cls(owner, 0)

    @cached_property
    def members(self) -> tuple:
        return tuple(i for i in range(self.owner.n) if self.bits >> i & 1)

    @cached_property
    def mask(self) -> np.ndarray:
        out = np.zeros(self.owner.n, dtype=bool)
        out[list(self.members)] = True
        out.flags.writeable = False
        return out

    def names(self):
        return [self.owner.states[i] for i in self.members]

    def is_full(self):
        return self.bits == (1 << self.owner.n) - 1

    def __contains__(self, i):
        return 0 <= i < self.owner.n and bool(self.bits >> i & 1)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __bool__(self):
        return self.bits != 0

    def _same(self, other):
        if not isinstance(other, StateSubset):
            return NotImplemented
        if other.owner is not self.owner and other.owner != self.owner:
            raise ValueError("subsets belong to different systems")
        return other

    def __and__(self, other):
        other = self._same(other)
        return StateSubset(self.owner, self.bits & other.bits)

    def __or__(self, other):
        other = self._same(other)
        return StateSubset(self.owner, self.bits | other.bits)

    def __sub__(self, other):
        other = self._same(other)
        return StateSubset(self.owner, self.bits & ~other.bits)

    def __le__(self, other):
        other = self._same(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __repr__(self):
        return "{" + ", ".join(self.names()) + "}"
