"""A single-qubit representation of the three-strand braid group.

With ``A = exp(i theta)`` and ``d = -A^2 - A^-2 = -2 cos(2 theta)``:

    U1 = [[d, 0], [0, 0]]
    U2 = [[1/d, r], [r, d - 1/d]],   r = sqrt(1 - d^-2)
    Phi(s_k) = A I + A^-1 U_k

The bracket of the closure of a 3-braid ``b`` (normalised so a lone circle
is 1) is ``Tr Phi(b) + A^e(b) (d^2 - 2)`` with ``e(b)`` the exponent sum.

``Phi(s1)`` is ``diag(-A^-3, A)`` and is unitary for every theta;
``Phi(s2)`` is unitary exactly when ``|d| >= 1``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, LetterKind, exponent_sum
from .linalg import is_unitary

__all__ = [
    "Rep3Params",
    "make_rep",
    "phi",
    "bracket_via_trace",
    "tl_identities",
    "UNITARY_INTERVALS",
    "in_unitary_union",
    "representation_is_unitary",
    "RepresentationError",
]

BOUNDARY_TOL = 1e-12

UNITARY_INTERVALS = (
    (0.0, math.pi / 6),
    (math.pi / 3, 2 * math.pi / 3),
    (5 * math.pi / 6, 7 * math.pi / 6),
    (4 * math.pi / 3, 5 * math.pi / 3),
    (11 * math.pi / 6, 2 * math.pi),
)


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Rep3Params:
    theta: float
    A: complex
    d: float
    U1: np.ndarray
    U2: np.ndarray
    boundary: bool  # |d| == 1: r = 0 and U2 is diagonal
    real: bool  # entries of U2 are real (|d| >= 1)


def make_rep(theta: float, strict: bool = True) -> Rep3Params:
    """Build ``U1``, ``U2`` at ``theta``.

    ``strict`` rejects ``|d| < 1``, where ``r`` would be imaginary; with
    ``strict=False`` the principal complex square root is used instead, giving
    a valid but non-unitary representation. ``d = 0`` is always rejected.
    """
    a = cmath.exp(1j * theta)
    d = -2.0 * math.cos(2.0 * theta)
    if abs(d) < BOUNDARY_TOL:
        raise RepresentationError(f"d = 0 at theta = {theta}; U2 needs 1/d")
    disc = 1.0 - d**-2
    if disc < -BOUNDARY_TOL and strict:
        raise RepresentationError(f"|d| = {abs(d):.6g} < 1 at theta = {theta}; entries would be complex")
    real = disc >= -BOUNDARY_TOL
    r = math.sqrt(max(disc, 0.0)) if real else cmath.sqrt(disc)
    U1 = np.array([[d, 0], [0, 0]], dtype=complex)
    U2 = np.array([[1 / d, r], [r, d - 1 / d]], dtype=complex)
    return Rep3Params(theta, a, d, U1, U2, abs(abs(d) - 1) <= 1e-9, real)


def _generator(p: Rep3Params, index: int) -> np.ndarray:
    if index == 1:
        U = p.U1
    elif index == 2:
        U = p.U2
    else:
        raise RepresentationError(f"generator s{index} does not exist on three strands")
    return p.A * np.eye(2) + U / p.A


def phi(b: BraidWord, p: Rep3Params) -> np.ndarray:
    """Ordered product of generator images; inverse letters use the matrix inverse."""
    if b.strands != 3:
        raise RepresentationError(f"need a 3-strand braid, got {b.strands} strands")
    out = np.eye(2, dtype=complex)
    for letter in b.letters:
        if letter.kind is LetterKind.VIRTUAL:
            raise RepresentationError("virtual letters have no image under this representation")
        g = _generator(p, letter.index)
        if letter.kind is LetterKind.NEGATIVE:
            g = np.linalg.inv(g)
        out = out @ g
    return out


def bracket_via_trace(b: BraidWord, p: Rep3Params) -> complex:
    return complex(np.trace(phi(b, p)) + p.A ** exponent_sum(b) * (p.d**2 - 2))


def tl_identities(p: Rep3Params) -> dict[str, float]:
    """Residuals (max entry modulus) of the candidate Temperley-Lieb relations.

    Both the standard relations and the alternative readings ``U2^2 = d U1``,
    ``U2 U1 U2 = U1`` are evaluated so the caller can see which hold.
    """
    U1, U2, d = p.U1, p.U2, p.d

    def res(x, y) -> float:
        return float(np.max(np.abs(x - y)))

    return {
        "U1^2 = d U1": res(U1 @ U1, d * U1),
        "U2^2 = d U2": res(U2 @ U2, d * U2),
        "U2^2 = d U1": res(U2 @ U2, d * U1),
        "U1 U2 U1 = U1": res(U1 @ U2 @ U1, U1),
        "U2 U1 U2 = U2": res(U2 @ U1 @ U2, U2),
        "U2 U1 U2 = U1": res(U2 @ U1 @ U2, U1),
        "Tr U1 = d": float(abs(np.trace(U1) - d)),
        "Tr U2 = d": float(abs(np.trace(U2) - d)),
        "Tr U1 U2 = 1": float(abs(np.trace(U1 @ U2) - 1)),
        "Tr U2 U1 = 1": float(abs(np.trace(U2 @ U1) - 1)),
    }


def in_unitary_union(theta: float) -> bool:
    """Membership in the closed interval union, ``theta`` taken mod 2 pi."""
    t = math.fmod(theta, 2 * math.pi)
    if t < 0:
        t += 2 * math.pi
    eps = 1e-12
    return any(lo - eps <= t <= hi + eps for lo, hi in UNITARY_INTERVALS)


def representation_is_unitary(p: Rep3Params, tol: float = 1e-9) -> dict[str, bool]:
    s1 = _generator(p, 1)
    s2 = _generator(p, 2)
    u1, u2 = is_unitary(s1, tol), is_unitary(s2, tol)
    return {"s1": u1, "s2": u2, "representation": u1 and u2}
