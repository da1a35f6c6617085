import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotamp.linalg import SingularMatrixError, exact, identity, kron, swap_matrix, tensors_equal, to_numeric
from knotamp.models import F_MATRIX, G_MATRIX, bracket_model, swap_fg_model, virtual_model, virtual_r_matrix
from knotamp.scalar_ring import A, LaurentPoly
from knotamp.yangbaxter import (
    check_enhancement,
    check_model,
    check_ybe,
    is_entangling_2q,
    mu_from_cupcap,
    realign,
    solve_mu,
)

from strategies import complex_matrix

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def test_check_ybe_examples():
    assert check_ybe(bracket_model().R) is True
    assert check_ybe(swap_matrix(2)) is True
    assert check_ybe(virtual_r_matrix()) is True
    rng = np.random.default_rng(5)
    assert check_ybe(complex_matrix(rng, 4)) > 1e-3
    with pytest.raises(ValueError):
        check_ybe(identity(3))


def test_check_model_reports_random_r():
    m = bracket_model()
    rng = np.random.default_rng(8)
    R = complex_matrix(rng, 4)
    broken = m.at(1j)
    from dataclasses import replace

    broken = replace(broken, R=R, Rbar=np.linalg.inv(R))
    report = check_model(broken)
    assert not report["yang_baxter"].passed
    assert report["R_Rbar_identity"].passed
    assert report.to_json()["passed"] is False


def test_product_form_ybe_needs_scalars():
    rng = np.random.default_rng(2)
    for _ in range(5):
        F, G = complex_matrix(rng, 2), complex_matrix(rng, 2)
        assert check_ybe(kron(F, G)) > 1e-6
    x, t = 2.0 - 1j, 0.5j
    assert check_ybe(kron(x * np.eye(2), t * np.eye(2))) < 1e-12


def test_swap_form_ybe_iff_commuting():
    rng = np.random.default_rng(3)
    S = swap_matrix(2, "numeric")
    for _ in range(5):
        F = complex_matrix(rng, 2)
        G_comm = F @ F - 3 * F + 2j * np.eye(2)  # polynomial in F commutes with F
        G_non = complex_matrix(rng, 2)
        assert check_ybe(kron(F, G_comm) @ S) < 1e-9
        assert check_ybe(kron(F, G_non) @ S) > 1e-6
    assert check_ybe(kron(F_MATRIX, G_MATRIX) @ swap_matrix(3)) is True


def test_bracket_r_at_plus_minus_i_not_entangling():
    m = bracket_model()
    for a in (1j, -1j):
        for R in (m.R, m.Rbar):
            num = to_numeric(R, a)
            v = is_entangling_2q(num)
            assert not v.entangling and v.witness is None
            assert v.decomposition.form == "Swap"
            assert np.allclose(v.decomposition.reconstruct(), num, atol=1e-10)
            # four-entry form: entangling only when ab != cd
            a_, b_, c_, d_ = num[0, 0], num[3, 3], num[2, 1], num[1, 2]
            assert abs(a_ * b_ - c_ * d_) < 1e-12


def test_exact_decomposition_at_a_equals_i():
    m = bracket_model()
    i = LaurentPoly.const((0, 1))
    R = np.array([LaurentPoly.coerce(v).subs_unit(i.constant()) for v in m.R.reshape(-1)], dtype=object)
    R = exact(R.reshape(4, 4).tolist())
    v = is_entangling_2q(R)
    assert not v.entangling
    assert tensors_equal(v.decomposition.reconstruct(), R)
    assert v.decomposition.A[0, 0] == 1


def test_virtual_r_entangling_witness():
    theta = math.pi / 4
    v = is_entangling_2q(virtual_r_matrix(cmath.exp(1j * theta)))
    assert v.entangling and v.decomposition is None
    x, y, z, w = v.witness
    assert np.allclose([x, y, z, w], [1 / math.sqrt(2)] * 4)
    expected = x * y * z * w * 2j * math.sin(2 * theta)
    assert abs(v.witness_determinant - expected) < 1e-12


def test_virtual_r_not_entangling_when_sine_vanishes():
    assert not is_entangling_2q(virtual_r_matrix(1.0)).entangling


def test_cnot_entangling():
    v = is_entangling_2q(CNOT)
    assert v.entangling
    assert abs(v.witness_determinant) > 0
    assert v.to_json()["entangling"] is True


def test_singular_rejected():
    with pytest.raises(SingularMatrixError):
        is_entangling_2q(np.zeros((4, 4), dtype=complex))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_decomposition_round_trip(seed, swap):
    rng = np.random.default_rng(seed)
    Ma, Mb = complex_matrix(rng, 2), complex_matrix(rng, 2)
    M = kron(Ma, Mb)
    if swap:
        M = M @ swap_matrix(2, "numeric")
    v = is_entangling_2q(M)
    assert not v.entangling
    assert v.decomposition.form == ("Swap" if swap else "Product")
    assert np.max(np.abs(v.decomposition.reconstruct() - M)) <= 1e-10 * max(1, np.max(np.abs(M)))
    # gauge: first nonzero entry of the first factor is 1
    first = next(x for x in v.decomposition.A.reshape(-1) if abs(x) > 1e-12)
    assert abs(first - 1) < 1e-12


def test_realign_rank_one_for_products():
    M = kron(exact([[1, A], [0, 2]]), exact([[A, 1], [1, 0]]))
    R = realign(M)
    assert all(R[i, k] * R[j, l] == R[i, l] * R[j, k] for i in range(4) for j in range(4) for k in range(4) for l in range(4))


def test_enhancement_examples():
    assert check_enhancement(swap_matrix(2), identity(2))
    mu = exact([[1, 0], [0, -1]])
    assert not check_enhancement(identity(4), mu)  # trace(mu) = 0, not 1
    mu1 = exact([[1, 0], [0, 0]])
    assert check_enhancement(identity(4), mu1)
    R = to_numeric(bracket_model().R, 1j)
    assert isinstance(check_enhancement(R, np.diag([1, -1]).astype(complex)), bool)


def test_mu_from_cupcap():
    assert tensors_equal(mu_from_cupcap(identity(2)), identity(2))
    m = bracket_model()
    mu = mu_from_cupcap(m.cup)
    assert tensors_equal(mu, exact([[-(A**2), 0], [0, -(A**-2)]]))
    assert mu[0, 0] + mu[1, 1] == m.loop_value
    a, b, c, d = 2, 3, 1, 2  # determinant 1
    M = exact([[a, b], [c, d]])
    assert tensors_equal(mu_from_cupcap(M), exact([[a * d - b * b, -a * c + a * b], [c * d - b * d, -c * c + a * d]]))
    with pytest.raises(SingularMatrixError):
        mu_from_cupcap(exact([[1, 2], [2, 4]]))


def test_mu_target_is_infeasible():
    result = solve_mu()
    assert not result.feasible
    assert result.groebner_basis == ["1"]
    assert result.forced_zero_determinant
    assert solve_mu(((1, 0), (0, 1))).feasible
