import itertools
import json
from fractions import Fraction as F

import pytest

from mvconn import FiniteLattice, UNIT, boolean, chain, check_demorgan_lattice, load_lattice
from mvconn.errors import (BadNegation, ForeignElement, MalformedDocument, NotALattice,
                           NotDistributive)

from oracles import first_distributivity_failure


def fs(s):
    return frozenset(s)


def test_two_element_chain():
    L = load_lattice({"name": "two", "elements": ["0", "1"], "leq": [["0", "1"]],
                      "negation": {"0": "1", "1": "0"}})
    assert L.bottom == "0" and L.top == "1"
    assert L.negate("0") == "1"
    assert check_demorgan_lattice(L).passed


def test_boolean_cube_meet_join_are_set_operations(bool3):
    for x, y in itertools.product(bool3.elements(), repeat=2):
        assert bool3.meet(x, y) == x & y
        assert bool3.join(x, y) == x | y
        assert bool3.leq(x, y) == (x <= y)
    assert bool3.bottom == fs("") and bool3.top == fs("abc")
    assert bool3.meet(fs("ab"), fs("bc")) == fs("b")
    assert bool3.negate(fs("ab")) == fs("c")


def test_m3_rejected_with_atom_witness(fixtures):
    with pytest.raises(NotDistributive) as exc:
        load_lattice(fixtures / "m3.json")
    w = exc.value.witness
    assert set(w) <= {"a", "b", "c"} and len(set(w)) == 3


def test_m3_witness_matches_oracle(fixtures):
    doc = json.loads((fixtures / "m3.json").read_text())
    # independent: compute meet/join by inspection of the diamond
    elems = doc["elements"]

    def meet(x, y):
        if x == y or y == "1":
            return x
        if x == "1":
            return y
        return "0"

    def join(x, y):
        if x == y or y == "0":
            return x
        if x == "0":
            return y
        return "1"
    expected = first_distributivity_failure(elems, meet, join)
    with pytest.raises(NotDistributive) as exc:
        load_lattice(doc)
    assert exc.value.witness == expected == ("a", "b", "c")


def test_identity_negation_fails_antitone(fixtures):
    with pytest.raises(BadNegation) as exc:
        load_lattice(fixtures / "bool2_identity.json")
    assert "antitone" in str(exc.value)
    assert exc.value.witness == ("0", "a")


def test_report_on_unvalidated_identity_negation(fixtures):
    L = load_lattice(fixtures / "bool2_identity.json", validate=False)
    report = check_demorgan_lattice(L)
    assert not report.passed
    assert report["antitone"].witness == (L.bottom, "a")
    assert report["involution"].verdict == "pass"


def test_chain5_with_reversing_negation():
    assert check_demorgan_lattice(chain(5)).passed


def test_bottom_below_everything(bool3, c11):
    for L in (bool3, c11):
        assert all(L.leq(L.bottom, x) for x in L.elements())


def test_unit_operations():
    assert UNIT.meet(F(3, 10), F(7, 10)) == F(3, 10)
    assert UNIT.join(F(3, 10), F(7, 10)) == F(7, 10)
    assert UNIT.negate(F(3, 10)) == F(7, 10)
    assert UNIT.leq(UNIT.bottom, F(1, 3))


def test_unit_lattice_laws_sampled():
    report = check_demorgan_lattice(UNIT)
    assert report.passed
    assert report.params["samples"] == 10_000


def test_covers_are_closed_transitively():
    L = FiniteLattice(["0", "a", "1"], [("0", "a"), ("a", "1")], {"0": "1", "a": "a", "1": "0"})
    assert L.leq("0", "1")
    assert L.chain


def test_full_relation_input_accepted():
    elems = ["0", "a", "1"]
    pairs = [(x, y) for i, x in enumerate(elems) for y in elems[i:]]
    L = FiniteLattice(elems, pairs, {"0": "1", "a": "a", "1": "0"})
    assert L.join("0", "a") == "a"


def test_not_a_lattice_two_maximal_elements():
    with pytest.raises(NotALattice):
        FiniteLattice(["0", "a", "b"], [("0", "a"), ("0", "b")], {"0": "0", "a": "a", "b": "b"})


def test_cycle_is_not_antisymmetric():
    with pytest.raises(NotALattice):
        FiniteLattice(["a", "b"], [("a", "b"), ("b", "a")], {"a": "b", "b": "a"})


def test_diamond_with_swap_negation_is_boolean(fixtures):
    L = load_lattice(fixtures / "diamond.json")
    assert L.negate("a") == "b"
    assert L.meet("a", "b") == "0"


def test_foreign_element(bool3):
    with pytest.raises(ForeignElement):
        bool3.meet(fs("z"), fs(""))
    with pytest.raises(ForeignElement):
        chain(3).check(F(1, 3))


@pytest.mark.parametrize("doc, field", [
    ({"elements": ["0"], "negation": {"0": "0"}, "name": 3}, "name"),
    ({"elements": [], "negation": {}}, "elements"),
    ({"elements": ["0", "0"], "negation": {"0": "0"}}, "elements"),
    ({"elements": ["0", "1"], "leq": [["0"]], "negation": {"0": "1", "1": "0"}}, "leq"),
    ({"elements": ["0", "1"], "leq": [["0", "x"]], "negation": {"0": "1", "1": "0"}}, "leq"),
    ({"elements": ["0", "1"], "leq": [["0", "1"]], "negation": {"0": "1"}}, "negation"),
    ({"elements": ["0", "1"], "leq": [["0", "1"]], "negation": {"0": "1", "1": "0"},
      "connectives": {"p": {"T": [["0"]], "S": [["0"]]}}}, "connectives.p.T"),
])
def test_malformed_documents_name_the_field(doc, field):
    with pytest.raises(MalformedDocument) as exc:
        load_lattice(doc)
    assert field in str(exc.value)


def test_invalid_json_text():
    with pytest.raises(MalformedDocument):
        load_lattice("{not json")


def test_boolean_sizes():
    assert len(boolean(1)) == 2
    assert len(boolean(5)) == 32
    assert check_demorgan_lattice(boolean(1)).passed


def test_chain_requires_two_points():
    with pytest.raises(ValueError):
        chain(1)
