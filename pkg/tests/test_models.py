import cmath
import math

import numpy as np
import pytest

from knotamp.diagram import curl_unknot, parse_morse
from knotamp.linalg import identity, is_unitary, mat_inverse, tensors_equal, to_numeric
from knotamp.models import (
    F_MATRIX,
    FG_MATRIX,
    G_MATRIX,
    bracket_model,
    model_by_name,
    product_model,
    swap_fg_model,
    virtual_model,
    virtual_r_matrix,
)
from knotamp.scalar_ring import A, LaurentPoly
from knotamp.statesum import evaluate, transfer
from knotamp.yangbaxter import check_model, check_ybe, is_entangling_2q

CIRCLE_VALUE = -(A**2) - A**-2


def test_bracket_model_data():
    m = bracket_model()
    assert tensors_equal(m.cup @ m.cup, identity(2))
    total = sum((m.cap[a, b] ** 2 for a in range(2) for b in range(2)), LaurentPoly())
    assert total == CIRCLE_VALUE
    assert m.loop_value == CIRCLE_VALUE
    assert tensors_equal(m.R @ m.Rbar, identity(4))
    assert tensors_equal(mat_inverse(m.R), m.Rbar)


def test_bracket_curl_factors_come_from_the_engine():
    m = bracket_model()
    assert m.curl_pos == -(A**3)
    assert m.curl_neg == -(A**-3)
    assert m.normalization == "writhe_monomial"
    t = transfer(parse_morse("U1,X0,A1", initial_width=1), m)
    assert tensors_equal(t, identity(2) * -(A**3))


def test_bracket_displayed_r_is_the_negative_crossing():
    # A * M^{ab} M_{cd} + A^-1 * delta delta, written out
    m = bracket_model()
    i = LaurentPoly.const((0, 1))
    M = [[0, i * A], [-i * A**-1, 0]]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    expected = A * M[a][b] * M[c][d] + A**-1 * (1 if (a, b) == (c, d) else 0)
                    assert m.Rbar[2 * a + b, 2 * c + d] == expected
    assert m.Rbar[1, 1] == A**-1 - A**3


def test_swap_model_data():
    assert tensors_equal(F_MATRIX @ F_MATRIX, identity(3))
    assert tensors_equal(G_MATRIX @ G_MATRIX, identity(3))
    assert tensors_equal(FG_MATRIX, np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=object))
    m = swap_fg_model()
    assert m.dim == 3 and m.loop_value == 3
    assert check_ybe(m.R) is True
    assert tensors_equal(m.curl_pos, FG_MATRIX)
    assert m.normalization is None


def test_product_model_data():
    m = product_model(1)
    assert m.formal_delta == -1
    assert m.curl_pos == LaurentPoly.const((0, 1))
    trivial = product_model(0)
    assert trivial.formal_delta == 1
    assert tensors_equal(trivial.R, identity(1))
    with pytest.raises(ValueError):
        product_model(1, cup_scale=2)


def test_product_model_consistency_depends_on_s():
    assert check_model(product_model(2)).passed
    assert check_model(product_model(0)).passed
    report = check_model(product_model(1))
    assert report["yang_baxter"].passed and report["R_Rbar_identity"].passed
    assert not report["slide_min_R"].passed


def test_virtual_model_data():
    m = virtual_model()
    assert check_ybe(m.R) is True
    assert m.loop_value == 2
    for theta in (0.2, 1.0, 2.7):
        numeric = virtual_model(cmath.exp(1j * theta))
        assert is_unitary(numeric.R)
        assert is_entangling_2q(numeric.R).entangling
    with pytest.raises(ValueError):
        virtual_model(1.5)
    assert np.allclose(virtual_r_matrix(1j), to_numeric(m.R, 1j))


@pytest.mark.parametrize("name", ["bracket", "swapfg", "virtual"])
def test_models_pass_consistency(name):
    report = check_model(model_by_name(name))
    assert report.passed, [e.name for e in report.equations if not e.passed]


def test_virtual_detour_equations_present():
    names = {e.name for e in check_model(virtual_model()).equations}
    assert {"virtual_involution", "virtual_yang_baxter", "mixed_yang_baxter_R", "mixed_yang_baxter_Rbar"} <= names


def test_bracket_unitarity_only_at_plus_minus_i():
    m = bracket_model()
    for a in (1j, -1j):
        assert is_unitary(to_numeric(m.R, a))
        assert is_unitary(to_numeric(m.Rbar, a))
    for theta in (0.3, 1.0, 2.0, 4.0):
        assert not is_unitary(to_numeric(m.Rbar, cmath.exp(1j * theta)))


def test_numeric_specialisation_matches_exact():
    m = bracket_model()
    a = cmath.exp(0.7j)
    num = m.at(a)
    assert num.kind == "numeric"
    assert abs(num.loop_value - CIRCLE_VALUE.eval(a)) < 1e-12
    assert check_model(num).passed
    d = curl_unknot(3)
    assert abs(evaluate(d, num) - evaluate(d, m).eval(a)) < 1e-10


def test_unknown_model_name():
    with pytest.raises(KeyError):
        model_by_name("fibonacci")
