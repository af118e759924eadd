from itertools import combinations

import pytest

from weylcat.affine import AffineRoot
from weylcat.bijection import count_formula
from weylcat.poset import (
    Ideal,
    count_abelian,
    count_antichains,
    enumerate_antichains,
    l_set,
    leq,
    lower_series,
)
from weylcat.rootsys import RootSystemError, build

SMALL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("F", 4), ("G", 2)]


def reachable_leq(rs):
    """α ≤ β via chains of covering steps β = α + α_i (path-existence oracle)."""
    roots = rs.positive_roots
    succ = {
        a: [b for b in roots if sum(b) == sum(a) + 1 and all(y >= x for x, y in zip(a, b))]
        for a in roots
    }
    out = {}
    for a in roots:
        seen = {a}
        stack = [a]
        while stack:
            for b in succ[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        out[a] = seen
    return out


@pytest.mark.parametrize("letter,n", [("A", 3), ("B", 3), ("C", 4), ("D", 4), ("F", 4), ("G", 2)])
def test_leq_matches_path_oracle(letter, n):
    rs = build(letter, n)
    up = reachable_leq(rs)
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            assert leq(rs, a, b) == (b in up[a])


def test_leq_examples():
    a2 = build("A", 2)
    assert leq(a2, (1, 0), (1, 1))
    assert not leq(a2, (1, 0), (0, 1))
    assert leq(build("B", 2), (0, 1), (1, 1))
    with pytest.raises(RootSystemError):
        leq(a2, (0, 0), (1, 1))


def brute_force_dual_order_ideals(rs):
    roots = rs.positive_roots
    out = set()
    for r in range(len(roots) + 1):
        for subset in combinations(roots, r):
            s = set(subset)
            if all(
                b in s
                for a in s
                for b in roots
                if all(y >= x for x, y in zip(a, b))
            ):
                out.add(frozenset(s))
    return out


@pytest.mark.parametrize("letter,n", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_enumeration_against_brute_force(letter, n):
    rs = build(letter, n)
    ideals = enumerate_antichains(rs)
    phis = [i.phi for i in ideals]
    assert len(set(phis)) == len(phis)
    assert set(phis) == brute_force_dual_order_ideals(rs)


def test_a2_ideals():
    rs = build("A", 2)
    phis = [i.phi for i in enumerate_antichains(rs)]
    t, a1, a2 = (1, 1), (1, 0), (0, 1)
    assert phis == [frozenset(), {t}, {a1, t}, {a2, t}, {a1, a2, t}]


def test_b2_ideals():
    rs = build("B", 2)
    phis = [i.phi for i in enumerate_antichains(rs)]
    t, a12, a1, a2 = (1, 2), (1, 1), (1, 0), (0, 1)
    assert phis == [
        frozenset(),
        {t},
        {a12, t},
        {a1, a12, t},
        {a2, a12, t},
        {a1, a2, a12, t},
    ]


def test_a3_count():
    assert len(enumerate_antichains(build("A", 3))) == 14


@pytest.mark.parametrize("letter,n", SMALL)
def test_roundtrip_and_counts(letter, n):
    rs = build(letter, n)
    ideals = enumerate_antichains(rs)
    assert len(ideals) == count_formula(rs) == count_antichains(rs)
    for i in ideals:
        assert Ideal.from_antichain(rs, i.antichain) == i
        assert Ideal.from_phi(rs, i.phi) == i


@pytest.mark.parametrize("letter,n", SMALL)
def test_lower_series_properties(letter, n):
    rs = build(letter, n)
    for ideal in enumerate_antichains(rs):
        levels = lower_series(ideal)
        assert len(levels) < rs.coxeter_number
        for k, level in enumerate(levels, start=1):
            assert all(sum(b) >= k for b in level)
            if k > 1:
                assert level < levels[k - 2]
        if ideal.is_abelian:
            assert len(levels) <= 1


def test_lower_series_a2():
    rs = build("A", 2)
    assert lower_series(Ideal.from_antichain(rs, [(1, 1)])) == [{(1, 1)}]
    full = Ideal.from_antichain(rs, [(1, 0), (0, 1)])
    assert lower_series(full) == [{(1, 0), (0, 1), (1, 1)}, {(1, 1)}]


def test_l_set_a2():
    rs = build("A", 2)
    assert l_set(Ideal.from_antichain(rs, [(1, 1)])) == {AffineRoot((-1, -1), 1)}
    full = Ideal.from_antichain(rs, [(1, 0), (0, 1)])
    assert l_set(full) == {
        AffineRoot((-1, -1), 1),
        AffineRoot((0, -1), 1),
        AffineRoot((-1, -1), 2),
        AffineRoot((-1, 0), 1),
    }
    assert l_set(Ideal.from_antichain(rs, [])) == frozenset()


@pytest.mark.parametrize("letter,n,expected", [("A", 1, 2), ("A", 2, 4), ("B", 3, 8), ("F", 4, 16), ("D", 5, 32)])
def test_count_abelian(letter, n, expected):
    assert count_abelian(build(letter, n)) == expected == 2**n


def test_invalid_antichain():
    rs = build("A", 2)
    with pytest.raises(ValueError):
        Ideal.from_antichain(rs, [(1, 0), (1, 1)])
    with pytest.raises(ValueError):
        Ideal(rs, frozenset({(1, 0)}), ((1, 0),))
