"""Reference systems used by the tests, the demos and the ``fixture`` command.

The chemistry-flavoured toys are relabelled modular-product models, so
their axiom status follows from the arithmetic; only the names carry the
narrative.
"""
from __future__ import annotations

from .core import FiniteTGS
from .errors import PreconditionError
from .model_finder import default_names

__all__ = [
    "projection_model",
    "constant_model",
    "modular_product_model",
    "product_model",
    "catalysis_toy",
    "thermo_toy",
    "field_toy",
    "FIXTURES",
    "get_fixture",
]


def projection_model(n: int, m: int, slot: str = "left") -> FiniteTGS:
    """``[A,a,B,b,C]`` returns the argument in ``slot`` (left, middle or right)."""
    pick = {"left": 0, "middle": 2, "right": 4}
    if slot not in pick:
        raise PreconditionError(f"slot must be one of {sorted(pick)}")
    if n < 1 or m < 1:
        raise PreconditionError("n and m must be >= 1")
    k = pick[slot]
    states, mediators = default_names(n, m)
    return FiniteTGS.from_function(states, mediators, lambda *args: args[k])


def constant_model(n: int, m: int, c: int = 0) -> FiniteTGS:
    if not 0 <= c < n:
        raise PreconditionError(f"constant {c} is not a state index below {n}")
    states, mediators = default_names(n, m)
    return FiniteTGS(states, mediators, [c] * (n ** 3 * m ** 2))


def product_model(k: int, mediator_values, states=None, mediators=None) -> FiniteTGS:
    """States ``Z_k``; mediator ``i`` acts as the residue ``mediator_values[i]``.

    ``[A,a,B,b,C] = A * a * B * b * C mod k``.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    vals = [v % k for v in mediator_values]
    states = states or [f"S{i}" for i in range(k)]
    mediators = mediators or [f"g{v}" for v in vals]
    return FiniteTGS.from_function(
        states, mediators, lambda a, x, b, y, c: a * vals[x] * b * vals[y] * c % k)


def modular_product_model(k: int) -> FiniteTGS:
    """``S = Gamma = Z_k`` with the 5-fold product mod ``k``."""
    return product_model(k, range(k))


def catalysis_toy() -> FiniteTGS:
    """Z_4 product; ``uncat`` acts as 1, ``cat`` as 3."""
    return product_model(4, [1, 3], mediators=["uncat", "cat"])


def thermo_toy() -> FiniteTGS:
    """Z_3 product with two temperature/pressure regimes acting as 1 and 2."""
    return product_model(3, [1, 2], mediators=["T1_p1", "T2_p2"])


def field_toy() -> FiniteTGS:
    """Z_4 product; ``lowfreq`` acts as 1, ``highfreq`` as 3."""
    return product_model(4, [1, 3], mediators=["lowfreq", "highfreq"])


FIXTURES = {
    "left-projection": lambda: projection_model(5, 3, "left"),
    "middle-projection": lambda: projection_model(2, 1, "middle"),
    "right-projection": lambda: projection_model(4, 2, "right"),
    "constant": lambda: constant_model(6, 2, 0),
    "constant-4-2": lambda: constant_model(4, 2, 0),
    "z1": lambda: modular_product_model(1),
    "z2": lambda: modular_product_model(2),
    "z6": lambda: modular_product_model(6),
    "catalysis": catalysis_toy,
    "thermo": thermo_toy,
    "field": field_toy,
}

# systems expected to satisfy every axiom
MODELS = [name for name in FIXTURES if name != "middle-projection"]


def get_fixture(name: str) -> FiniteTGS:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r} (choose from {', '.join(FIXTURES)})") from None
