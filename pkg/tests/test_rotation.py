from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from bouquets.rotation import (
    HalfEdge,
    RotationError,
    RotationSyntaxError,
    SignedRotation,
    boundary_components,
    canonical_form,
    euler_genus,
    format_rotation,
    induced_sub_rotation,
    interlaced,
    interlacement_graph,
    is_orientable,
    is_prime,
    parse_rotation,
)
from conftest import rotations
from oracles import all_words, interlace_connected, orbit, rank_euler_genus

EXAMPLE = "(-1, -2, 3, 4, 2, 1, 3, 4)"


def test_parse_example():
    rot = parse_rotation(EXAMPLE)
    assert rot.m == 4
    assert rot.twisted_edges() == {1, 2}
    assert list(rot.half_edges())[:2] == [HalfEdge(1, -1), HalfEdge(2, -1)]


@pytest.mark.parametrize("text", ["()", "", "  (  ) "])
def test_parse_empty(text):
    assert parse_rotation(text).m == 0


def test_parse_without_parens_and_whitespace():
    assert parse_rotation(" -1,1 ").word == (-1, 1)
    assert parse_rotation("(1,\n2 ,1,2)").word == (1, 2, 1, 2)


@pytest.mark.parametrize("text,fragment", [
    ("(1, 1, 1)", "label 1 appears 3 times"),
    ("(1, 2, 2)", "label 1 appears 1 times"),
    ("(1, 0, 1, 0)", "label 0"),
    ("(-1, -1)", "label 1 has two '-'"),
    ("(1, 1, 3, 3)", "offending label"),
])
def test_parse_validation_errors(text, fragment):
    with pytest.raises(RotationError, match=fragment):
        parse_rotation(text)


@pytest.mark.parametrize("text", ["(1, a, 1)", "(1,, 1)", "(1, 1", "(1 2, 1, 2)", "(+1, 1)"])
def test_parse_syntax_errors(text):
    with pytest.raises(RotationSyntaxError):
        parse_rotation(text)


def test_format():
    assert format_rotation(parse_rotation(EXAMPLE)) == EXAMPLE
    assert format_rotation(SignedRotation()) == "()"


@given(rotations())
def test_format_parse_roundtrip(rot):
    assert parse_rotation(format_rotation(rot)) == rot
    assert parse_rotation(format_rotation(rot).replace(" ", "")) == rot


def test_induced_sub_rotation():
    rot = parse_rotation(EXAMPLE)
    assert induced_sub_rotation(rot, {1, 2}).word == (-1, -2, 2, 1)
    assert induced_sub_rotation(rot, {1, 2, 3, 4}) == rot
    assert induced_sub_rotation(rot, set()).word == ()
    # labels are kept, not renumbered
    assert induced_sub_rotation(rot, {3, 4}).word == (3, 4, 3, 4)
    with pytest.raises(RotationError):
        induced_sub_rotation(rot, {5})


@given(rotations(), st.data())
def test_deletion_commutes(rot, data):
    edges = list(range(1, rot.m + 1))
    A = data.draw(st.sets(st.sampled_from(edges))) if edges else set()
    B = data.draw(st.sets(st.sampled_from(edges))) if edges else set()
    inner = induced_sub_rotation(rot, A)
    assert induced_sub_rotation(inner, B & A) == induced_sub_rotation(rot, A & B)


@pytest.mark.parametrize("text,f", [
    ("(1, 1)", 2),
    ("(-1, 1)", 1),
    ("(1, 2, 1, 2)", 1),
    (EXAMPLE, 1),
    ("()", 1),
    ("(1, 1, 2, 2)", 3),
])
def test_boundary_components(text, f):
    assert boundary_components(parse_rotation(text)) == f


def test_euler_genus_examples():
    rot = parse_rotation(EXAMPLE)
    assert euler_genus(SignedRotation()) == 0
    assert euler_genus(rot) == 4
    assert euler_genus(induced_sub_rotation(rot, {1})) == 1


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_genus_matches_rank_oracle_exhaustive(m):
    for w in all_words(m):
        assert euler_genus(SignedRotation(w)) == rank_euler_genus(w), w


@given(rotations(max_edges=8))
def test_genus_matches_rank_oracle_random(rot):
    assert euler_genus(rot) == rank_euler_genus(rot.word)


@given(rotations(max_edges=8))
def test_euler_formula(rot):
    f = boundary_components(rot)
    eps = euler_genus(rot)
    assert f >= 1 and eps >= 0
    assert 1 - rot.m + f == 2 - eps


@given(rotations(max_edges=8, orientable=True))
def test_orientable_genus_is_even(rot):
    assert is_orientable(rot)
    assert euler_genus(rot) % 2 == 0


def test_is_orientable():
    assert is_orientable(parse_rotation("(1, 2, 1, 2)"))
    assert not is_orientable(parse_rotation("(-1, 1)"))
    assert not is_orientable(parse_rotation(EXAMPLE))


def test_interlaced():
    assert interlaced(parse_rotation("(1, 2, 1, 2)"), 1, 2)
    assert not interlaced(parse_rotation("(1, 2, 2, 1)"), 1, 2)
    b5 = parse_rotation("(1, 2, 3, 4, 5, -1, 4, 5, 2, 3)")
    assert all(interlaced(b5, 1, k) for k in (2, 3, 4, 5))
    with pytest.raises(RotationError):
        interlaced(b5, 1, 6)
    with pytest.raises(RotationError):
        interlaced(b5, 2, 2)


@pytest.mark.parametrize("text,prime", [
    ("(1, 1, 2, 2)", False),
    ("(1, 2, 1, 2)", True),
    (EXAMPLE, True),
    ("()", True),
    ("(-1, 1)", True),
    ("(1, 2, 2, 3, 3, 1)", False),
])
def test_is_prime(text, prime):
    assert is_prime(parse_rotation(text)) is prime


def _brute_prime(word):
    n = len(word)
    for i, j in combinations(range(n + 1), 2):
        inner = [abs(t) for t in word[i:j]]
        if 0 < len(inner) < n and all(inner.count(k) == 2 for k in inner):
            return False
    return True


@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_prime_iff_interlace_connected(m):
    from bouquets.search import chord_diagrams

    for d in chord_diagrams(m):
        rot = SignedRotation(d)
        assert is_prime(rot) == interlace_connected(d) == _brute_prime(d), d


def test_interlacement_graph():
    g = interlacement_graph(parse_rotation(EXAMPLE))
    assert g[1] == {3, 4} and g[3] == {1, 2, 4}


def test_canonical_examples():
    assert canonical_form(parse_rotation("(2, 1, 2, 1)")).word == (1, 2, 1, 2)
    assert canonical_form(parse_rotation("(1, -1)")) == canonical_form(parse_rotation("(-1, 1)"))
    assert canonical_form(SignedRotation()) == SignedRotation()


@given(rotations())
def test_canonical_idempotent(rot):
    c = canonical_form(rot)
    assert canonical_form(c) == c


@pytest.mark.parametrize("m", [1, 2, 3])
def test_canonical_is_orbit_minimum(m):
    from bouquets.rotation import token_key

    done = set()
    for w in sorted(all_words(m)):
        if w in done:
            continue
        orb = orbit(w)
        done |= orb
        expected = min(orb, key=token_key)
        f = boundary_components(SignedRotation(w))
        for v in orb:
            rot = SignedRotation(v)
            assert canonical_form(rot).word == expected
            assert boundary_components(rot) == f


def _band_instance(rng, first, count):
    toks = [k for k in range(first, first + count) for _ in (0, 1)]
    rng.shuffle(toks)
    cut = rng.randint(0, len(toks))
    return toks[:cut], toks[cut:]


def test_band_moves_preserve_boundary_count():
    import random

    rng = random.Random(20221016)
    for _ in range(200):
        P, Q = _band_instance(rng, 3, rng.randint(0, 4))
        before = SignedRotation([1, 2, *P, -1, *Q, 2], strict_labels=False)
        after = SignedRotation([*P, 2, 1, 2, -1, *Q], strict_labels=False)
        assert boundary_components(before) == boundary_components(after)

        P, Q = _band_instance(rng, 4, rng.randint(0, 4))
        before = SignedRotation([1, 2, 3, *P, -1, *Q, 2, 3])
        after = SignedRotation([2, 3, 2, 3, 1, *P, -1, *Q])
        assert boundary_components(before) == boundary_components(after)
