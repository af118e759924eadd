from fractions import Fraction

import pytest

from weylcat.bijection import count_formula, ideal_to_w
from weylcat.poset import Ideal, enumerate_antichains
from weylcat.rootsys import build
from weylcat.signtypes import (
    RegionWitness,
    _linear_program,
    count_regions,
    ideal_to_signtype,
    region_witness,
)


def test_signtype_examples():
    rs = build("A", 2)
    ideals = enumerate_antichains(rs)
    assert ideal_to_signtype(ideals[1]).assignment == {(1, 0): "0", (0, 1): "0", (1, 1): "+"}
    assert ideal_to_signtype(ideals[0]).symbols() == "000"
    assert ideal_to_signtype(ideals[4]).symbols() == "+++"


def test_witness_examples():
    rs = build("A", 2)
    theta = Ideal.from_antichain(rs, [(1, 1)])
    w = region_witness(theta)
    assert w.holds()
    assert w.pairing((1, 0)) < 1 and w.pairing((0, 1)) < 1 and w.pairing((1, 1)) > 1
    for beta, c in zip(rs.positive_roots, [Fraction(2, 3), Fraction(2, 3), Fraction(4, 3)]):
        assert RegionWitness(rs, (Fraction(2, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(2, 3)), theta.phi).pairing(beta) == c
    zero = region_witness(Ideal.from_antichain(rs, []))
    assert all(0 < zero.pairing(b) < 1 for b in rs.positive_roots)
    full = region_witness(Ideal.from_antichain(rs, [(1, 0), (0, 1)]))
    assert full.pairing((1, 0)) > 1 and full.pairing((0, 1)) > 1


def test_witness_point_coordinates():
    rs = build("B", 3)
    for ideal in enumerate_antichains(rs):
        w = region_witness(ideal)
        for i in range(3):
            e = tuple(int(i == j) for j in range(3))
            assert rs.pairing(w.point, e) == w.coweight[i]


@pytest.mark.parametrize("letter,n,expected", [("A", 2, 5), ("B", 2, 6), ("A", 3, 14), ("G", 2, 8), ("D", 4, 50)])
def test_count_regions(letter, n, expected):
    assert count_regions(build(letter, n)) == expected


@pytest.mark.parametrize("letter,n", [("A", 4), ("B", 4), ("F", 4), ("D", 5)])
def test_sign_types_injective_and_separated(letter, n):
    rs = build(letter, n)
    ideals = enumerate_antichains(rs)
    signs = {ideal_to_signtype(i).plus for i in ideals}
    assert len(signs) == len(ideals) == count_formula(rs)
    witnesses = [region_witness(i) for i in ideals]
    assert all(w.holds() for w in witnesses)
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            wa, wb = witnesses[a], witnesses[b]
            assert any((wa.pairing(r) > 1) != (wb.pairing(r) > 1) for r in rs.positive_roots)


@pytest.mark.parametrize("letter,n", [("A", 4), ("C", 4), ("D", 5)])
def test_linear_program_route_alone(letter, n):
    rs = build(letter, n)
    for ideal in enumerate_antichains(rs):
        c = _linear_program(rs, ideal)
        assert c is not None
        assert RegionWitness(rs, None, c, ideal.phi).holds()


@pytest.mark.parametrize("letter,n", [("B", 3), ("G", 2), ("D", 4)])
def test_alcove_of_w_lies_in_region(letter, n):
    """The alcove w̄_i(C_1) sits inside X_A: cross-check against the affine encoding."""
    from weylcat.bijection import alcove_barycenter

    rs = build(letter, n)
    for ideal in enumerate_antichains(rs):
        point = ideal_to_w(ideal).act_point(alcove_barycenter(rs))
        coweight = tuple(rs.pairing(point, tuple(int(i == j) for j in range(n))) for i in range(n))
        assert RegionWitness(rs, point, coweight, ideal.phi).holds()
