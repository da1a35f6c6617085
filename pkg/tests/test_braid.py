import pytest
from hypothesis import given

from knotamp.braid import (
    BraidParseError,
    LetterKind,
    braid_to_morse,
    closure_permutation,
    exponent_sum,
    parse_braid,
)
from knotamp.diagram import components, seifert_count, validate, writhe

from strategies import braid_words


def test_parse_examples():
    b = parse_braid("2: s1 s1 s1")
    assert b.strands == 2 and len(b.letters) == 3
    assert all(l.kind is LetterKind.POSITIVE for l in b.letters)
    assert exponent_sum(parse_braid("3: s1 s2^-1")) == 0
    with pytest.raises(BraidParseError):
        parse_braid("2: s3")


@pytest.mark.parametrize("text", ["0:", "x: s1", "2 s1", "3: t1", "3: s1^2", "3: s0"])
def test_parse_errors(text):
    with pytest.raises(BraidParseError):
        parse_braid(text)


def test_exponent_sums():
    assert exponent_sum(parse_braid("2: s1 s1 s1")) == 3
    assert exponent_sum(parse_braid("3: s1 s2^-1")) == 0
    assert exponent_sum(parse_braid("2: v1 v1")) == 0


def test_round_trip_text():
    b = parse_braid("4: s1 s3^-1 v2 s2")
    assert parse_braid(str(b)) == b


def test_closures():
    circle = braid_to_morse(parse_braid("1:"))
    assert circle.to_word() == "U0,A0"
    trefoil = braid_to_morse(parse_braid("2: s1 s1 s1"))
    assert writhe(trefoil) == 3
    hopf = braid_to_morse(parse_braid("2: s1 s1"))
    assert components(hopf).count == 2


def test_open_braid():
    d = braid_to_morse(parse_braid("3: s1 s2"), close=False)
    assert d.initial_width == 3 and d.final_width == 3


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_identity_closure_components(n):
    assert components(braid_to_morse(parse_braid(f"{n}:"))).count == n


@pytest.mark.parametrize("k", range(-4, 7))
def test_two_strand_seifert_count(k):
    word = " ".join(["s1" if k > 0 else "s1^-1"] * abs(k))
    assert seifert_count(braid_to_morse(parse_braid(f"2: {word}"))) == 2


@given(braid_words(max_strands=5, max_length=12))
def test_closure_combinatorics(b):
    d = braid_to_morse(b)
    validate(d)
    assert d.is_closed
    assert writhe(d) == exponent_sum(b)
    assert seifert_count(d) == b.strands
    perm = closure_permutation(b)
    cycles, seen = 0, set()
    for s in range(b.strands):
        if s not in seen:
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    assert components(d).count == cycles


@given(braid_words(max_strands=4, max_length=8, virtual=True))
def test_virtual_letters_carry_no_sign(b):
    d = braid_to_morse(b)
    assert writhe(d) == exponent_sum(b)
