"""Concrete tangle models: bracket, swap (F, G), product and virtual.

A model assigns a cup tensor ``cup[a, b]`` to each minimum, a cap tensor
``cap[a, b]`` to each maximum, and 4-index tensors to crossings, stored as
``n^2 x n^2`` matrices in the convention of :mod:`knotamp.linalg`.

Crossing ``X`` (positive) uses ``R`` and ``Y`` (negative) uses ``Rbar``. For
the bracket,

    R[ab, cd]    = A * d(a,c) d(b,d) + A^-1 * cap[a,b] cup[c,d]
    Rbar[ab, cd] = A^-1 * d(a,c) d(b,d) + A * cap[a,b] cup[c,d]

and with this choice a positive curl contracts to ``-A^3`` times a straight
strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from .diagram import MorseDiagram, parse_morse
from .linalg import exact, identity, mat_inverse, swap_matrix, to_numeric
from .scalar_ring import A, LaurentPoly

__all__ = [
    "TangleModel",
    "F_MATRIX",
    "G_MATRIX",
    "FG_MATRIX",
    "bracket_model",
    "swap_fg_model",
    "product_model",
    "virtual_model",
    "virtual_r_matrix",
    "model_by_name",
    "MODEL_NAMES",
]

F_MATRIX = exact([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
G_MATRIX = exact([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
FG_MATRIX = F_MATRIX @ G_MATRIX

I_UNIT = LaurentPoly.const((0, 1))
A_INV = A ** -1

# Curls on a single strand, to the right of it.
POSITIVE_CURL = parse_morse("U1,X0,A1", initial_width=1)
NEGATIVE_CURL = parse_morse("U1,Y0,A1", initial_width=1)


@dataclass(frozen=True)
class TangleModel:
    name: str
    dim: int
    cup: np.ndarray
    cap: np.ndarray
    R: np.ndarray
    Rbar: np.ndarray
    virtual: np.ndarray | None = None
    loop_value: object = None
    curl_pos: object = None
    curl_neg: object = None
    normalization: str | None = None  # "writhe_monomial" or None
    kind: Literal["exact", "numeric"] = "exact"
    ring: Literal["laurent", "int"] = "laurent"
    formal_delta: object = None
    params: dict = field(default_factory=dict)

    def tensors(self) -> dict[str, np.ndarray]:
        out = {"cup": self.cup, "cap": self.cap, "R": self.R, "Rbar": self.Rbar}
        if self.virtual is not None:
            out["virtual"] = self.virtual
        return out

    def at(self, a: complex) -> TangleModel:
        """Numeric copy with ``A`` replaced by ``a``."""
        if self.kind == "numeric":
            return self
        conv = {k: to_numeric(v, a) for k, v in self.tensors().items()}

        def num(x):
            if x is None:
                return None
            if isinstance(x, np.ndarray):
                return to_numeric(x, a)
            return LaurentPoly.coerce(x).eval(a)

        return replace(
            self,
            cup=conv["cup"],
            cap=conv["cap"],
            R=conv["R"],
            Rbar=conv["Rbar"],
            virtual=conv.get("virtual"),
            loop_value=num(self.loop_value),
            curl_pos=num(self.curl_pos),
            curl_neg=num(self.curl_neg),
            formal_delta=num(self.formal_delta),
            kind="numeric",
            params={**self.params, "A": a},
        )


def _loop(cup: np.ndarray, cap: np.ndarray):
    n = cup.shape[0]
    total = 0
    for a in range(n):
        for b in range(n):
            total = total + cup[a, b] * cap[a, b]
    return total


def _curl_factor(model: TangleModel, curl: MorseDiagram):
    """Scalar if the curl acts as a multiple of the identity, else the matrix."""
    from .statesum import transfer

    t = transfer(curl, model)
    n = model.dim
    diag = t[0, 0]
    is_scalar = all(
        (t[i, j] == diag) if i == j else (t[i, j] == 0) for i in range(n) for j in range(n)
    )
    if model.kind == "numeric":
        is_scalar = bool(np.allclose(t, diag * np.eye(n), atol=1e-12))
    return (diag if is_scalar else t), is_scalar


def _finish(model: TangleModel) -> TangleModel:
    """Fill loop value and curl factors by contracting diagrams in the engine."""
    model = replace(model, loop_value=_loop(model.cup, model.cap))
    pos, pos_scalar = _curl_factor(model, POSITIVE_CURL)
    neg, neg_scalar = _curl_factor(model, NEGATIVE_CURL)
    unit = pos_scalar and neg_scalar
    if unit and model.kind == "exact":
        unit = LaurentPoly.coerce(pos).is_unit()
    norm = "writhe_monomial" if unit else None
    return replace(model, curl_pos=pos, curl_neg=neg, normalization=norm)


def _bracket_tensors(cup: np.ndarray, cap: np.ndarray, a, a_inv):
    n = cup.shape[0]
    R = np.empty((n * n, n * n), dtype=object)
    Rbar = np.empty((n * n, n * n), dtype=object)
    for x in range(n):
        for y in range(n):
            for c in range(n):
                for d in range(n):
                    vert = 1 if (x == c and y == d) else 0
                    hor = cap[x, y] * cup[c, d]
                    R[x * n + y, c * n + d] = a * vert + a_inv * hor
                    Rbar[x * n + y, c * n + d] = a_inv * vert + a * hor
    return R, Rbar


def bracket_model() -> TangleModel:
    """The bracket model with ``M = [[0, iA], [-iA^-1, 0]]`` as both cup and cap."""
    M = exact([[0, I_UNIT * A], [-I_UNIT * A_INV, 0]])
    R, Rbar = _bracket_tensors(M, M, A, A_INV)
    return _finish(TangleModel("bracket", 2, M, M.copy(), R, Rbar))


def _swap_crossing(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """``T[ab, cd] = F[a, d] * G[b, c]``: F rides the strand from a to d, G from b to c."""
    n = F.shape[0]
    T = np.empty((n * n, n * n), dtype=object)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    T[a * n + b, c * n + d] = F[a, d] * G[b, c]
    return T


def swap_fg_model(F: np.ndarray | None = None, G: np.ndarray | None = None) -> TangleModel:
    """Swap-form model ``R = S (F (x) G)`` with identity cups and caps.

    The inverse crossing carries ``G^-1`` on the strand from top-left and
    ``F^-1`` on the other; for the default involutions these are ``G`` and ``F``.
    """
    F = F_MATRIX if F is None else F
    G = G_MATRIX if G is None else G
    n = F.shape[0]
    R = _swap_crossing(F, G)
    Rbar = _swap_crossing(mat_inverse(G), mat_inverse(F))
    ident = identity(n)
    model = TangleModel("swapfg", n, ident, ident.copy(), R, Rbar, ring="int", params={"F": F, "G": G})
    return _finish(model)


def product_model(s_exponent: int = 1, cup_scale=1) -> TangleModel:
    """Product-form model with ``R = s``, ``s = i**s_exponent``.

    Only the one-dimensional realisation exists: for ``n >= 2`` the slide
    equations force a zero cup. ``cup_scale`` must be a unit ``c``; the cup is
    ``[[c]]`` and the cap ``[[c^-1]]``. ``formal_delta`` records ``s**2``.
    """
    s = I_UNIT ** (s_exponent % 4)
    c = LaurentPoly.coerce(cup_scale)
    if not c.is_unit():
        raise ValueError("cup_scale must be a unit of the scalar ring")
    cup = exact([[c]])
    cap = exact([[c.inverse()]])
    model = TangleModel(
        f"product(s=i^{s_exponent % 4})",
        1,
        cup,
        cap,
        exact([[s]]),
        exact([[s.inverse()]]),
        formal_delta=s * s,
        params={"s": s, "cup_scale": c},
    )
    return _finish(model)


def virtual_r_matrix(a=None) -> np.ndarray:
    """The 4x4 operator with ``A`` on the anti-diagonal corners and ``A^-1`` in the middle."""
    if a is None:
        x, xi = A, A_INV
        return exact([[0, 0, 0, x], [0, xi, 0, 0], [0, 0, xi, 0], [x, 0, 0, 0]])
    a = complex(a)
    return np.array([[0, 0, 0, a], [0, 1 / a, 0, 0], [0, 0, 1 / a, 0], [a, 0, 0, 0]], dtype=complex)


def virtual_model(a=None, tol: float = 1e-12) -> TangleModel:
    """Virtual model: the 4x4 operator above, swap virtual crossings, identity cups."""
    if a is not None and abs(abs(complex(a)) - 1) > tol:
        raise ValueError("numeric A must lie on the unit circle")
    R = virtual_r_matrix()
    Rbar = exact([[0, 0, 0, A_INV], [0, A, 0, 0], [0, 0, A, 0], [A_INV, 0, 0, 0]])
    ident = identity(2)
    model = _finish(TangleModel("virtual", 2, ident, ident.copy(), R, Rbar, virtual=swap_matrix(2)))
    return model if a is None else model.at(complex(a))


MODEL_NAMES = ("bracket", "swapfg", "product", "virtual")


def model_by_name(name: str, **kwargs) -> TangleModel:
    if name == "bracket":
        return bracket_model()
    if name == "swapfg":
        return swap_fg_model()
    if name == "product":
        return product_model(**kwargs)
    if name == "virtual":
        return virtual_model(**kwargs)
    raise KeyError(f"unknown model {name!r}; choose from {', '.join(MODEL_NAMES)}")
