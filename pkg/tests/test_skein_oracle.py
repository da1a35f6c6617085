import random

import pytest
from hypothesis import given, settings

from knotamp.braid import braid_to_morse, parse_braid, random_braid
from knotamp.diagram import circle, curl_unknot, mirror
from knotamp.models import bracket_model
from knotamp.scalar_ring import A, LaurentPoly
from knotamp.skein_oracle import (
    OracleError,
    normalized_skein,
    skein_bracket,
    smoothed_diagram,
    state_loop_counts,
)
from knotamp.statesum import evaluate

from strategies import braid_words

BRACKET = bracket_model()
DELTA = -(A**2) - A**-2


def test_circle():
    assert skein_bracket(circle()) == DELTA


def test_hopf_and_trefoil_agree_with_engine():
    for word in ("2: s1 s1", "2: s1 s1 s1", "3: s1 s2^-1 s1 s2^-1"):
        d = braid_to_morse(parse_braid(word))
        assert skein_bracket(d) == evaluate(d, BRACKET)


def test_normalized_examples():
    assert normalized_skein(curl_unknot(1)) == DELTA
    assert normalized_skein(curl_unknot(-2)) == DELTA
    right = braid_to_morse(parse_braid("2: s1 s1 s1"))
    left = braid_to_morse(parse_braid("2: s1^-1 s1^-1 s1^-1"))
    assert normalized_skein(left) == normalized_skein(right).bar()
    assert normalized_skein(right) != normalized_skein(circle())


def test_state_weights():
    states = state_loop_counts(braid_to_morse(parse_braid("2: s1")))
    assert sorted((e, loops) for _, e, loops in states) == [(-1, 1), (1, 2)]


def test_rejects_virtual_and_large():
    with pytest.raises(OracleError):
        skein_bracket(braid_to_morse(parse_braid("2: v1")))
    with pytest.raises(OracleError):
        skein_bracket(braid_to_morse(parse_braid("2: " + " ".join(["s1"] * 17))))


@settings(max_examples=40, deadline=None)
@given(braid_words(max_strands=4, max_length=8))
def test_mirror_symmetry(b):
    d = braid_to_morse(b)
    assert skein_bracket(mirror(d)) == skein_bracket(d).bar()


def test_loop_counts_agree_with_tensor_path():
    rng = random.Random(6)
    for _ in range(15):
        b = random_braid(rng, rng.randint(2, 4), rng.randint(1, 6))
        d = braid_to_morse(b)
        for mask, _, loops in state_loop_counts(d):
            assert evaluate(smoothed_diagram(d, mask), BRACKET) == DELTA**loops
