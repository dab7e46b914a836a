import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tgs import (IdealKind, PredicateError, PreconditionError, SizeError, StateSubset,
                 enumerate_ideals, evaluate, generate_ideal, is_chemical_ideal, is_gamma_ideal,
                 is_ideal, is_prime, is_reaction_closed, is_semiprime)
from tgs.fixtures import FIXTURES, constant_model, modular_product_model, projection_model

import oracles
from conftest import tables

Z6 = modular_product_model(6)
LEFT = projection_model(4, 2, "left")
GAMMA = [IdealKind.LEFT, IdealKind.RIGHT, IdealKind.MIDDLE, IdealKind.TWO_SIDED]


def S(t, *xs):
    return StateSubset.of(t, xs)


def subsets(t):
    return [StateSubset(t, b) for b in range(1, 1 << t.n)]


# reaction-closed

def test_left_projection_every_subset_reaction_closed():
    assert all(is_reaction_closed(LEFT, X) for X in subsets(LEFT))


def test_z6_reaction_closed_examples():
    assert is_reaction_closed(Z6, S(Z6, 0, 3))
    v = is_reaction_closed(Z6, S(Z6, 1))
    assert not v
    # first violation in cell order; the witness (1,2,1,1,1) -> 2 also violates
    assert v.witness == (1, 0, 1, 0, 1)
    assert evaluate(Z6, *v.witness) not in S(Z6, 1)
    assert evaluate(Z6, 1, 2, 1, 1, 1) == 2


def test_empty_subset_rejected_everywhere():
    empty = StateSubset.empty(Z6)
    for fn in (is_reaction_closed, is_chemical_ideal, is_prime):
        with pytest.raises(PreconditionError):
            fn(Z6, empty)
    with pytest.raises(PreconditionError):
        is_gamma_ideal(Z6, empty, IdealKind.LEFT)
    with pytest.raises(PreconditionError):
        generate_ideal(Z6, empty, IdealKind.CHEMICAL)


# chemical

def test_chemical_examples():
    assert all(is_chemical_ideal(LEFT, X) for X in subsets(LEFT))
    assert is_chemical_ideal(Z6, S(Z6, 0))
    v = is_chemical_ideal(Z6, S(Z6, 1))
    assert not v and evaluate(Z6, *v.witness) != 1
    a, _, _, _, c = v.witness
    assert a == c == 1


# gamma

def test_left_projection_gamma():
    for X in subsets(LEFT):
        assert is_gamma_ideal(LEFT, X, IdealKind.LEFT)
        right = is_gamma_ideal(LEFT, X, IdealKind.RIGHT)
        assert bool(right) == X.is_full()
        if not right:
            a = right.witness[0]
            assert a not in X and right.witness[4] in X


def test_z6_evens_two_sided():
    J = S(Z6, 0, 2, 4)
    for kind in GAMMA:
        assert is_gamma_ideal(Z6, J, kind)


def test_gamma_rejects_non_gamma_kind():
    with pytest.raises(ValueError):
        is_gamma_ideal(Z6, S(Z6, 0), IdealKind.CHEMICAL)


def test_kind_parse():
    assert IdealKind.parse("two_sided") is IdealKind.TWO_SIDED
    with pytest.raises(ValueError):
        IdealKind.parse("sideways")


@pytest.mark.parametrize("kind", list(IdealKind), ids=lambda k: k.value)
@pytest.mark.parametrize("name", ["z6", "constant-4-2", "thermo", "catalysis", "middle-projection"])
def test_predicates_agree_with_oracle(name, kind):
    t = FIXTURES[name]()
    flat = oracles.flat_of(t)
    pred = oracles.predicate(kind.value)
    for X in subsets(t):
        assert bool(is_ideal(t, X, kind)) == pred(flat, t.n, t.m, frozenset(X))


@settings(max_examples=40, deadline=None)
@given(tables(), st.data())
def test_witnesses_really_violate(t, data):
    X = StateSubset(t, data.draw(st.integers(1, (1 << t.n) - 1)))
    for kind in IdealKind:
        v = is_ideal(t, X, kind)
        if v:
            continue
        a, x, b, y, c = v.witness
        assert evaluate(t, a, x, b, y, c) not in X
        args = (a, b, c)
        need = {IdealKind.REACTION_CLOSED: (0, 1, 2), IdealKind.CHEMICAL: (0, 2),
                IdealKind.LEFT: (0,), IdealKind.RIGHT: (2,), IdealKind.MIDDLE: (1,)}
        if kind is IdealKind.TWO_SIDED:
            assert any(z in X for z in args)
        else:
            assert all(args[p] in X for p in need[kind])


# generation

def test_generate_fixpoint_unchanged():
    J = S(Z6, 0, 2, 4)
    assert generate_ideal(Z6, J, IdealKind.TWO_SIDED) == J


def test_generate_z6_seed_3_chemical():
    got = generate_ideal(Z6, S(Z6, 3), IdealKind.CHEMICAL)
    expected = oracles.smallest_ideal_containing(oracles.flat_of(Z6), 6, 6, {3}, "chemical")
    assert expected == frozenset({0, 3})
    assert set(got) == expected


def test_generate_left_projection_two_sided_is_everything():
    for x in range(LEFT.n):
        assert generate_ideal(LEFT, S(LEFT, x), IdealKind.TWO_SIDED).is_full()


@pytest.mark.parametrize("kind", list(IdealKind), ids=lambda k: k.value)
@pytest.mark.parametrize("name", ["z6", "thermo", "constant-4-2", "field"])
def test_generate_equals_intersection_oracle(name, kind):
    t = FIXTURES[name]()
    closed = oracles.ideals_by_scan(oracles.flat_of(t), t.n, t.m, kind.value)
    for seed in subsets(t):
        got = generate_ideal(t, seed, kind)
        assert is_ideal(t, got, kind)
        expected = frozenset(range(t.n))
        for X in closed:
            if frozenset(seed) <= X:
                expected &= X
        assert set(got) == expected


@settings(max_examples=40, deadline=None)
@given(tables(), st.data())
def test_closure_operator_laws(t, data):
    full = (1 << t.n) - 1
    b1 = data.draw(st.integers(1, full))
    b2 = b1 | data.draw(st.integers(0, full))
    X1, X2 = StateSubset(t, b1), StateSubset(t, b2)
    for kind in IdealKind:
        c1, c2 = generate_ideal(t, X1, kind), generate_ideal(t, X2, kind)
        assert X1 <= c1                                  # extensive
        assert c1 <= c2                                  # monotone
        assert generate_ideal(t, c1, kind) == c1         # idempotent
        assert is_ideal(t, c1, kind)


# enumeration

def test_enumerate_left_projection_chemical_is_everything():
    assert len(enumerate_ideals(LEFT, IdealKind.CHEMICAL)) == 2 ** 4 - 1


def test_enumerate_z6_chemical_frozen():
    got = [set(X) for X in enumerate_ideals(Z6, IdealKind.CHEMICAL)]
    oracle = oracles.ideals_by_scan(oracles.flat_of(Z6), 6, 6, "chemical")
    assert [frozenset(x) for x in got] == oracle
    assert got == [{0}, {0, 3}, {0, 2, 4}, {0, 2, 3, 4}, {0, 1, 2, 3, 4, 5}]


def test_enumerate_constant_chemical_contains_constant():
    t = constant_model(4, 2, 2)
    got = enumerate_ideals(t, IdealKind.CHEMICAL)
    oracle = oracles.ideals_by_scan(oracles.flat_of(t), 4, 2, "chemical")
    assert [frozenset(X) for X in got] == oracle
    # boundary absorption forces the constant in, and that is all it forces
    assert [set(X) for X in got] == [set(X) for X in subsets(t) if 2 in X]


def test_enumerate_bound():
    with pytest.raises(SizeError):
        enumerate_ideals(modular_product_model(5), IdealKind.CHEMICAL, bound=4)


def test_enumeration_order_is_bitmask_order():
    got = enumerate_ideals(Z6, IdealKind.REACTION_CLOSED)
    assert [X.bits for X in got] == sorted(X.bits for X in got)


# primeness

def test_left_projection_prime():
    for X in subsets(LEFT):
        v = is_prime(LEFT, X)
        if X.is_full():
            assert not v and v.reason == "not proper"
        else:
            assert v


def test_full_set_is_never_prime():
    for name, build in FIXTURES.items():
        t = build()
        assert is_prime(t, StateSubset.full(t)).reason in ("not proper",)


def test_z6_evens_not_prime():
    v = is_prime(Z6, S(Z6, 0, 2, 4))
    assert not v and v.reason == "implication fails"
    a, x, b, y, c = v.witness
    assert evaluate(Z6, *v.witness) in (0, 2, 4) and {a, b, c} <= {1, 3, 5}
    first = next(cell for cell in oracles.cells(6, 6)
                 if evaluate(Z6, *cell) in (0, 2, 4) and {cell[0], cell[2], cell[4]} <= {1, 3, 5})
    assert v.witness == first == (1, 0, 1, 0, 1)
    # the hand-picked witness is also a genuine violation
    assert evaluate(Z6, 1, 2, 1, 1, 1) == 2


def test_not_an_ideal_reason():
    v = is_prime(Z6, S(Z6, 1))
    assert not v and v.reason == "not a chemical ideal"


def test_semiprime_examples():
    for X in subsets(LEFT):
        assert is_semiprime(LEFT, X)
    I = S(Z6, 0)
    expected = oracles.semiprime(oracles.flat_of(Z6), 6, 6, {0})
    assert bool(is_semiprime(Z6, I)) == expected is True
    assert evaluate(Z6, 2, 1, 2, 1, 2) == 2


def test_semiprime_requires_chemical_ideal():
    with pytest.raises(PredicateError) as e:
        is_semiprime(Z6, S(Z6, 1))
    assert e.value.witness is not None


def test_semiprime_witness():
    # {0} in Z4: 2*a*2*b*2 = 8ab = 0 mod 4 for all mediators, yet 2 is outside
    t = modular_product_model(4)
    v = is_semiprime(t, S(t, 0))
    assert not v and v.witness == 2


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_prime_semiprime_agree_with_oracle(name):
    t = FIXTURES[name]()
    flat = oracles.flat_of(t)
    for X in subsets(t):
        assert bool(is_prime(t, X)) == oracles.prime(flat, t.n, t.m, frozenset(X))
        if is_chemical_ideal(t, X):
            assert bool(is_semiprime(t, X)) == oracles.semiprime(flat, t.n, t.m, frozenset(X))


# structural properties

@settings(max_examples=50, deadline=None)
@given(tables())
def test_structural_implications_on_random_tables(t):
    for X in subsets(t):
        if is_chemical_ideal(t, X):
            assert is_reaction_closed(t, X)
        if is_gamma_ideal(t, X, IdealKind.TWO_SIDED):
            assert is_chemical_ideal(t, X)
            for kind in GAMMA:
                assert is_gamma_ideal(t, X, kind)
        if is_prime(t, X):
            assert is_semiprime(t, X)


@settings(max_examples=50, deadline=None)
@given(tables())
def test_intersection_of_chemical_ideals(t):
    found = enumerate_ideals(t, IdealKind.CHEMICAL)
    for I1, I2 in itertools.combinations(found, 2):
        meet = I1 & I2
        if meet:
            assert is_chemical_ideal(t, meet)
