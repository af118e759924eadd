import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat.affine import (
    AffineRoot,
    NotBiconvexError,
    from_inversions,
    from_word,
    generators,
    identity,
    inversion_set,
    inversion_set_by_levels,
    is_ideal_element,
    is_ideal_element_geometric,
    simple_affine_roots,
    translation,
)
from weylcat.bijection import alcove_barycenter, ideal_to_w
from weylcat.poset import enumerate_antichains, l_set
from weylcat.rootsys import build

TYPES = [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3), ("D", 4)]


def test_act_examples():
    rs = build("A", 2)
    a0 = AffineRoot((-1, -1), 1)
    assert translation(rs, (1, 1)).act(a0) == AffineRoot((-1, -1), 3)
    assert identity(rs).act(a0) == a0
    s0 = generators(rs)[0]
    assert s0.act(a0) == AffineRoot((1, 1), -1)


def test_from_word_a2():
    rs = build("A", 2)
    w = from_word(rs, [0, 1, 2, 1])
    assert w.tau == (1, 1) and w.v.is_identity
    assert from_word(rs, []).is_identity


def test_from_word_b2_s0():
    rs = build("B", 2)
    w = from_word(rs, [0])
    assert w.tau == (1, 1)  # θ̌ = α̌1 + α̌2
    assert w.v == rs.from_word([2, 1, 2])
    assert w.v.length == 3


def test_inversion_set_examples():
    rs = build("A", 2)
    assert inversion_set(from_word(rs, [0])) == {AffineRoot((-1, -1), 1)}
    assert inversion_set(from_word(rs, [0, 2])) == {AffineRoot((-1, -1), 1), AffineRoot((-1, 0), 1)}
    assert inversion_set(identity(rs)) == frozenset()


def test_from_inversions_examples():
    rs = build("A", 2)
    w = from_inversions(rs, {AffineRoot((-1, -1), 1), AffineRoot((0, -1), 1)})
    assert w == from_word(rs, [0, 1])
    full = [i for i in enumerate_antichains(rs) if len(i.phi) == 3][0]
    assert from_inversions(rs, l_set(full)) == from_word(rs, [0, 1, 2, 1])
    assert from_inversions(rs, set()).is_identity
    with pytest.raises(NotBiconvexError):
        from_inversions(rs, {AffineRoot((1, 0), 0), AffineRoot((0, 1), 0)})
    with pytest.raises(NotBiconvexError):
        from_inversions(rs, {AffineRoot((-1, 0), 0)})


def test_ideal_element_examples():
    a2 = build("A", 2)
    assert is_ideal_element(from_word(a2, [0, 1]))
    assert not is_ideal_element(from_word(a2, [1]))
    b2 = build("B", 2)
    assert is_ideal_element(from_word(b2, [0, 2, 0]))


def test_geometric_examples():
    rs = build("A", 2)
    assert is_ideal_element_geometric(translation(rs, (1, 1)))
    assert not is_ideal_element_geometric(translation(rs, (2, 2)))
    assert not is_ideal_element(translation(rs, (2, 2)))


@pytest.mark.parametrize("letter,n", [("A", 2), ("B", 2), ("A", 3), ("B", 3), ("G", 2)])
def test_ideal_elements_pass_both_tests(letter, n):
    rs = build(letter, n)
    for ideal in enumerate_antichains(rs):
        w = from_inversions(rs, l_set(ideal))
        assert is_ideal_element(w)
        assert is_ideal_element_geometric(w)
        assert ideal_to_w(ideal) == w


def random_word(draw_rank):
    return st.lists(st.integers(min_value=0, max_value=draw_rank), max_size=10)


@pytest.mark.parametrize("letter,n", TYPES)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_inversion_roundtrip_and_levels(letter, n, data):
    rs = build(letter, n)
    w = from_word(rs, data.draw(random_word(n)))
    inv = inversion_set(w)
    assert len(inv) == w.length
    assert all(a.is_positive for a in inv)
    assert inv == inversion_set_by_levels(w)
    assert from_inversions(rs, inv) == w
    assert from_word(rs, w.word) == w


@pytest.mark.parametrize("letter,n", [("B", 3), ("G", 2)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_composition_matches_generator_action(letter, n, data):
    rs = build(letter, n)
    word = data.draw(random_word(n))
    w = from_word(rs, word)
    gens = generators(rs)
    samples = list(simple_affine_roots(rs)) + [AffineRoot(r, k) for r in rs.positive_roots[:4] for k in (-2, 0, 3)]
    for a in samples:
        b = a
        for i in reversed(word):
            b = gens[i].act(b)
        assert w.act(a) == b


@pytest.mark.parametrize("letter,n", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_separation_semantics(letter, n, data):
    rs = build(letter, n)
    w = from_word(rs, data.draw(random_word(n)))
    inv = inversion_set(w)
    image = w.act_point(alcove_barycenter(rs))
    bound = w.length + 2
    for beta in rs.positive_roots:
        p = rs.pairing(beta, image)
        neg = tuple(-c for c in beta)
        for level in range(1, bound):
            assert (AffineRoot(neg, level) in inv) == (p > level)
        for level in range(0, bound):
            assert (AffineRoot(beta, level) in inv) == (p < -level)
