"""Tests for near-field structures and the exhaustive axiom checker."""

import json

import pytest

from conftest import get_field
from nearvec import near_field as nf
from nearvec.errors import TooLargeError
from nearvec.finite_field import Field

FIELD_KEYS = [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1),
              (2, 2), (3, 2), (5, 2)]


@pytest.mark.parametrize("key", FIELD_KEYS, ids=str)
def test_field_near_fields_pass_all_axioms(key):
    structure = nf.from_field(get_field(*key))
    report = nf.check_axioms(structure)
    assert report.all_pass, report.failed()
    assert nf.right_distributive_counterexample(structure) is None
    assert nf.distributive_elements(structure) == frozenset(structure.elements())


def test_axiom_checker_reports_counterexamples():
    n = 4
    bad = nf.NearField(
        [[max(a, b) for b in range(n)] for a in range(n)],
        [[(a * b) % n for b in range(n)] for a in range(n)],
    )
    report = nf.check_axioms(bad)
    assert not report.all_pass
    assert "add_inverses" in report.failed()
    assert report.witness("add_inverses") is not None


def test_axiom_report_serializes():
    report = nf.check_axioms(nf.from_field(Field(7)))
    payload = report.to_json()
    assert json.loads(json.dumps(payload)) == payload
    assert all(entry["pass"] for entry in payload.values())


class TestDickson9:
    def test_left_near_field_axioms_pass(self):
        d9 = nf.dickson9()
        assert nf.check_axioms(d9).all_pass

    def test_right_distributivity_fails(self):
        d9 = nf.dickson9()
        cx = nf.right_distributive_counterexample(d9)
        assert cx is not None
        a, b, c = cx
        lhs = d9.mul[d9.add[a][b]][c]
        rhs = d9.add[d9.mul[a][c]][d9.mul[b][c]]
        assert lhs != rhs

    def test_distributive_elements_are_the_prime_subfield(self):
        assert nf.distributive_elements(nf.dickson9()) == frozenset({0, 1, 2})

    def test_not_isomorphic_to_the_field_of_order_nine(self):
        d9 = nf.dickson9()
        g9 = nf.from_field(get_field(3, 2))
        assert nf.find_isomorphism(g9, d9) is None
        assert nf.find_isomorphism(d9, g9) is None

    def test_multiplicative_group_is_quaternion(self):
        d9 = nf.dickson9()
        orders = sorted(d9.mul_order(x) for x in d9.nonzero())
        assert orders == [1, 2, 4, 4, 4, 4, 4, 4]


def test_distributive_elements_form_a_subnear_field():
    for structure in (nf.dickson9(), nf.from_field(get_field(3, 2))):
        dist = nf.distributive_elements(structure)
        assert structure.zero in dist and structure.one in dist
        for a in dist:
            for b in dist:
                assert structure.add[a][b] in dist
                assert structure.mul[a][b] in dist


def test_isomorphism_reflexive_and_symmetric():
    d9 = nf.dickson9()
    g9 = nf.from_field(get_field(3, 2))
    g5 = nf.from_field(Field(5))
    for structure in (d9, g9, g5):
        iso = nf.find_isomorphism(structure, structure)
        assert iso is not None
    # symmetric: GF(9) built over a different modulus is still GF(9)
    other9 = nf.from_field(Field(3, 2, (2, 2, 1)))  # x^2 + 2x + 2
    fwd = nf.find_isomorphism(g9, other9)
    bwd = nf.find_isomorphism(other9, g9)
    assert fwd is not None and bwd is not None
    for a in range(9):
        for b in range(9):
            assert fwd[g9.add[a][b]] == other9.add[fwd[a]][fwd[b]]
            assert bwd[other9.add[a][b]] == g9.add[bwd[a]][bwd[b]]


def test_isomorphism_rejects_different_sizes_and_large_inputs():
    g5 = nf.from_field(Field(5))
    g7 = nf.from_field(Field(7))
    assert nf.find_isomorphism(g5, g7) is None
    big = nf.from_field(Field(11, 2, (1, 0, 1)))
    with pytest.raises(TooLargeError):
        nf.find_isomorphism(big, big)


def test_char_and_element_orders():
    d9 = nf.dickson9()
    assert d9.char() == 3
    assert d9.add_order(0) == 1
    assert all(d9.add_order(x) == 3 for x in d9.nonzero())
    g4 = nf.from_field(get_field(2, 2))
    assert g4.char() == 2


def test_unique_order_two_element_in_odd_characteristic():
    for structure in (nf.from_field(Field(7)), nf.from_field(get_field(3, 2)),
                      nf.dickson9()):
        involutions = [
            x for x in structure.nonzero()
            if x != structure.one and structure.mul[x][x] == structure.one
        ]
        assert len(involutions) == 1
        x = involutions[0]
        # the order-2 unit multiplies as additive negation
        for a in structure.elements():
            assert structure.mul[x][a] == structure.neg(a)
    for structure in (nf.from_field(Field(2)), nf.from_field(get_field(2, 2)),
                      nf.from_field(get_field(2, 3))):
        assert not any(
            x != structure.one and structure.mul[x][x] == structure.one
            for x in structure.nonzero()
        )
