import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotamp.jones3 import make_rep, phi
from knotamp.braid import parse_braid
from knotamp.linalg import (
    SingularMatrixError,
    exact,
    identity,
    is_unitary,
    kron,
    mat_det,
    mat_det2,
    mat_inverse,
    mat_mul,
    mat_trace,
    partial_trace_second,
    swap_matrix,
    tensor_from_json,
    tensor_to_json,
    tensors_equal,
)
from knotamp.models import F_MATRIX, FG_MATRIX, G_MATRIX
from knotamp.scalar_ring import A, LaurentPoly

from strategies import laurent

exact_2x2 = st.lists(laurent, min_size=4, max_size=4).map(lambda xs: exact([xs[:2], xs[2:]]))


def test_kron_identities():
    assert tensors_equal(kron(identity(2), identity(2)), identity(4))
    x = exact([[A, 0], [0, 2]])
    y = exact([[3, 0], [0, A**-1]])
    assert tensors_equal(kron(x, y), exact([[3 * A, 0, 0, 0], [0, 1, 0, 0], [0, 0, 6, 0], [0, 0, 0, 2 * A**-1]]))


def test_kron_f_g_blocks():
    k = kron(F_MATRIX, G_MATRIX)
    assert k.shape == (9, 9)
    for i in range(3):
        for j in range(3):
            assert tensors_equal(k[3 * i : 3 * i + 3, 3 * j : 3 * j + 3], F_MATRIX[i, j] * G_MATRIX)


def test_kron_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        kron(identity(2), np.eye(2, dtype=complex))


def test_traces_and_determinants():
    assert mat_trace(identity(3)) == 3
    assert mat_trace(FG_MATRIX) == -1
    a, b, c, d = A, 2, A**-1, 5
    assert mat_det2(exact([[a, b], [c, d]])) == a * d - b * c
    m = exact([[2, 1, 0], [1, 3, A], [0, A**-1, 1]])
    assert mat_det(m) == 2 * (3 - 1) - 1 * (1 - 0)


def test_inverse_exact_and_singular():
    M = exact([[0, LaurentPoly({1: (0, 1)})], [LaurentPoly({-1: (0, -1)}), 0]])
    assert tensors_equal(mat_inverse(M) @ M, identity(2))
    with pytest.raises(SingularMatrixError):
        mat_inverse(exact([[1, 2], [2, 4]]))
    with pytest.raises(SingularMatrixError):
        mat_inverse(exact([[2, 0], [0, 1]]))  # determinant 2 is not a unit
    with pytest.raises(SingularMatrixError):
        mat_inverse(np.array([[1, 2], [2, 4]], dtype=complex))


def test_partial_trace_examples():
    P = exact([[1, A], [0, 2]])
    Q = exact([[A, 1], [1, A**-1]])
    assert tensors_equal(partial_trace_second(kron(P, Q), 2), P * (A + A**-1))
    assert tensors_equal(partial_trace_second(identity(4), 2), 2 * identity(2))
    mu = exact([[1, 0], [0, -1]])
    # brute force: sum_b mu[a,b] mu[b,c] = (mu^2)[a,c]
    assert tensors_equal(partial_trace_second(swap_matrix(2) @ kron(mu, mu), 2), mu @ mu)
    with pytest.raises(ValueError):
        partial_trace_second(identity(3), 2)


def test_is_unitary_examples():
    assert is_unitary(np.eye(2))
    inside = make_rep(math.pi / 2)
    assert is_unitary(phi(parse_braid("3: s1"), inside))
    assert is_unitary(phi(parse_braid("3: s2"), inside))
    outside = make_rep(math.pi / 4 + 0.2, strict=False)  # |d| < 1
    assert not is_unitary(phi(parse_braid("3: s2"), outside))


@given(exact_2x2, exact_2x2, exact_2x2, exact_2x2)
def test_kron_mixed_product(x, y, u, v):
    assert tensors_equal(mat_mul(kron(x, y), kron(u, v)), kron(mat_mul(x, u), mat_mul(y, v)))


@given(exact_2x2, exact_2x2)
def test_trace_cyclic(x, y):
    assert mat_trace(x @ y) == mat_trace(y @ x)


@given(st.lists(laurent, min_size=16, max_size=16), st.lists(laurent, min_size=16, max_size=16), laurent)
def test_partial_trace_linear_and_trace_preserving(xs, ys, c):
    x = exact([xs[4 * k : 4 * k + 4] for k in range(4)])
    y = exact([ys[4 * k : 4 * k + 4] for k in range(4)])
    lhs = partial_trace_second(x + y * c, 2)
    rhs = partial_trace_second(x, 2) + partial_trace_second(y, 2) * c
    assert tensors_equal(lhs, rhs)
    assert mat_trace(partial_trace_second(x, 2)) == mat_trace(x)


@given(exact_2x2)
def test_matrix_json_round_trip_exact(x):
    assert tensors_equal(tensor_from_json(tensor_to_json(x)), x)


def test_matrix_json_round_trip_numeric():
    rng = np.random.default_rng(1)
    x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    data = tensor_to_json(x)
    assert np.array_equal(tensor_from_json(data), x)
    del data["kind"]
    assert np.array_equal(tensor_from_json(data), x)
