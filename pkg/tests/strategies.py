"""Shared hypothesis strategies."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from knotamp.braid import BraidLetter, BraidWord, LetterKind
from knotamp.scalar_ring import LaurentPoly

small_int = st.integers(min_value=-20, max_value=20)

gauss = st.tuples(small_int, small_int)

laurent = st.dictionaries(st.integers(min_value=-8, max_value=8), gauss, max_size=6).map(LaurentPoly)


@st.composite
def braid_words(draw, max_strands: int = 4, max_length: int = 10, virtual: bool = False) -> BraidWord:
    n = draw(st.integers(min_value=1, max_value=max_strands))
    if n == 1:
        return BraidWord(1, ())
    kinds = [LetterKind.POSITIVE, LetterKind.NEGATIVE] + ([LetterKind.VIRTUAL] if virtual else [])
    letters = draw(
        st.lists(
            st.builds(BraidLetter, st.integers(min_value=1, max_value=n - 1), st.sampled_from(kinds)),
            max_size=max_length,
        )
    )
    return BraidWord(n, tuple(letters))


def complex_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
