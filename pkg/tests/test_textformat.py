import random

import pytest

from tgs import (BadVersion, DuplicateTuple, MissingTuple, ParseError, StateMap, UnknownName,
                 parse_map, parse_subset, parse_tgs, serialize_map, serialize_tgs)
from tgs.fixtures import FIXTURES, catalysis_toy, modular_product_model

Z2_DOC = """\
tgs v1
states: S0 S1
mediators: g0 g1
op:
"""


def z2_body():
    return serialize_tgs(modular_product_model(2)).splitlines()[4:]


def test_canonical_form():
    text = serialize_tgs(modular_product_model(2))
    lines = text.splitlines()
    assert lines[:4] == ["tgs v1", "states: S0 S1", "mediators: g0 g1", "op:"]
    assert lines[4] == "S0 g0 S0 g0 S0 -> S0"
    assert lines[-1] == "S1 g1 S1 g1 S1 -> S1"
    assert len(lines) == 4 + 2 ** 3 * 2 ** 2
    assert text.endswith("\n")


def test_free_order_comments_and_whitespace():
    body = z2_body()
    random.Random(0).shuffle(body)
    messy = ["# a comment", "", "  tgs   v1  ", "states:S0   S1", "mediators : g0 g1 # inline",
             "op:"] + ["  " + "   ".join(line.split()) + "  # x" for line in body]
    t = parse_tgs("\n".join(messy))
    assert t == modular_product_model(2)
    assert serialize_tgs(t) == serialize_tgs(modular_product_model(2))


def test_catalysis_round_trip():
    t = catalysis_toy()
    assert parse_tgs(serialize_tgs(t)) == t


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_byte_identical_round_trip(name):
    text = serialize_tgs(FIXTURES[name]())
    assert serialize_tgs(parse_tgs(text)) == text


def test_bad_version():
    with pytest.raises(BadVersion) as e:
        parse_tgs("tgs v2\nstates: a\nmediators: g\nop:\na g a g a -> a\n")
    assert e.value.line == 1
    with pytest.raises(BadVersion):
        parse_tgs("")


def test_unknown_name_reports_line():
    body = z2_body()
    body[3] = body[3].replace("S1", "S7", 1)
    with pytest.raises(UnknownName) as e:
        parse_tgs(Z2_DOC + "\n".join(body))
    assert e.value.line == 8
    assert "S7" in str(e.value) and "line 8" in str(e.value)
    body = z2_body()
    body[0] = body[0].replace("g0", "gx", 1)
    with pytest.raises(UnknownName) as e:
        parse_tgs(Z2_DOC + "\n".join(body))
    assert e.value.line == 5 and "mediator" in str(e.value)


def test_duplicate_tuple_reports_both_lines():
    body = z2_body()
    body.append(body[2])
    with pytest.raises(DuplicateTuple) as e:
        parse_tgs(Z2_DOC + "\n".join(body))
    assert e.value.line == 4 + len(body)
    assert "line 7" in str(e.value)


def test_missing_tuple_names_first_gap():
    body = z2_body()
    del body[5]
    del body[2]
    with pytest.raises(MissingTuple) as e:
        parse_tgs(Z2_DOC + "\n".join(body))
    assert "S0 g0 S0 g1 S0" in str(e.value)
    assert e.value.line == 4


@pytest.mark.parametrize("doc", [
    "tgs v1\nstates:\nmediators: g\nop:\n",
    "tgs v1\nstates: a a\nmediators: g\nop:\n",
    "tgs v1\nmediators: g\nstates: a\nop:\n",
    "tgs v1\nstates: a\nmediators: g\nop:\na g a g -> a\n",
    "tgs v1\nstates: a\nmediators: g\nop:\na g a g a a\n",
    "tgs v1\nstates: a\nmediators: g\n",
    "tgs v1\nstates: a\nmediators: g\nop: x\n",
    "tgs v1\nstates: a,b\nmediators: g\nop:\n",
])
def test_other_syntax_errors(doc):
    with pytest.raises(ParseError):
        parse_tgs(doc)


def test_map_round_trip_and_errors():
    t = modular_product_model(2)
    f = StateMap(t, t, (0, 0))
    text = serialize_map(f)
    assert text == "S0 -> S0\nS1 -> S0\n"
    assert parse_map("# comment\nS1 -> S0\nS0 -> S0\n", t, t) == f
    with pytest.raises(UnknownName):
        parse_map("S0 -> S9\nS1 -> S0\n", t, t)
    with pytest.raises(DuplicateTuple):
        parse_map("S0 -> S0\nS0 -> S1\nS1 -> S0\n", t, t)
    with pytest.raises(MissingTuple):
        parse_map("S0 -> S0\n", t, t)
    with pytest.raises(ParseError):
        parse_map("S0 S0\n", t, t)


def test_parse_subset():
    t = modular_product_model(6)
    assert parse_subset(t, "S0, S2,S4").members == (0, 2, 4)
    with pytest.raises(UnknownName):
        parse_subset(t, "S0,S9")
