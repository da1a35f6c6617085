"""Small dense matrices over exact or numeric scalars.

Tensors are plain numpy arrays. Exact tensors use ``dtype=object`` holding
:class:`~knotamp.scalar_ring.LaurentPoly` values or Python ints (both satisfy
the ring contract); numeric tensors use ``complex128``. The two kinds are
never mixed in one operation.

Index convention for operators on ``V (x) V`` with ``dim V = n``: the entry
``T^{ab}_{cd}`` sits at row ``a*n + b`` and column ``c*n + d``, where ``(a, b)``
are the top endpoints of the diagram piece (its domain) and ``(c, d)`` the
bottom endpoints. A stack of pieces read top to bottom therefore composes as
the ordinary matrix product ``T1 @ T2 @ ...``, and ``np.kron`` places factors
on consecutive strands from left to right.
"""

from __future__ import annotations

import json
from typing import Literal

import numpy as np

from .scalar_ring import GaussInt, LaurentPoly

__all__ = [
    "SingularMatrixError",
    "scalar_kind",
    "exact",
    "identity",
    "kron",
    "mat_mul",
    "mat_trace",
    "mat_det2",
    "mat_det",
    "mat_inverse",
    "partial_trace_second",
    "is_unitary",
    "to_numeric",
    "tensors_equal",
    "max_residual",
    "swap_matrix",
    "tensor_to_json",
    "tensor_from_json",
]

ScalarKind = Literal["exact", "numeric"]


class SingularMatrixError(ArithmeticError):
    pass


def scalar_kind(x: np.ndarray) -> ScalarKind:
    return "exact" if x.dtype == object else "numeric"


def exact(rows) -> np.ndarray:
    """Build an exact tensor from nested lists of ints / GaussInt / LaurentPoly."""
    arr = np.array(rows, dtype=object)
    flat = arr.reshape(-1)
    for k, v in enumerate(flat):
        if isinstance(v, GaussInt):
            flat[k] = LaurentPoly.const(v)
        elif not isinstance(v, (int, LaurentPoly)):
            raise TypeError(f"exact tensor entries must be ring elements, got {v!r}")
    return flat.reshape(arr.shape)


def identity(n: int, kind: ScalarKind = "exact") -> np.ndarray:
    if kind == "exact":
        out = np.zeros((n, n), dtype=object)
        out[...] = 0
        for i in range(n):
            out[i, i] = 1
        return out
    return np.eye(n, dtype=complex)


def _check_kinds(*xs: np.ndarray) -> None:
    kinds = {scalar_kind(x) for x in xs}
    if len(kinds) > 1:
        raise TypeError("cannot mix exact and numeric tensors")


def _check_square(x: np.ndarray, name: str = "matrix") -> int:
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"{name} must be square, got shape {x.shape}")
    return x.shape[0]


def kron(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    _check_square(x)
    _check_square(y)
    _check_kinds(x, y)
    return np.kron(x, y)


def mat_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    _check_kinds(x, y)
    if x.shape[-1] != y.shape[0]:
        raise ValueError(f"incompatible shapes {x.shape} and {y.shape}")
    return x @ y


def mat_trace(x: np.ndarray):
    n = _check_square(x)
    total = x[0, 0] if n else 0
    for i in range(1, n):
        total = total + x[i, i]
    return total


def mat_det2(x: np.ndarray):
    if x.shape != (2, 2):
        raise ValueError("mat_det2 needs a 2x2 matrix")
    return x[0, 0] * x[1, 1] - x[0, 1] * x[1, 0]


def _divexact(p, q):
    if isinstance(p, LaurentPoly) or isinstance(q, LaurentPoly):
        return LaurentPoly.coerce(p).divexact(q)
    if p % q:
        raise ArithmeticError(f"{p} not divisible by {q}")
    return p // q


def _is_zero(v) -> bool:
    return v == 0


def mat_det(x: np.ndarray):
    """Determinant; exact tensors use fraction-free (Bareiss) elimination."""
    n = _check_square(x)
    if scalar_kind(x) == "numeric":
        return complex(np.linalg.det(x))
    if n == 0:
        return 1
    m = [list(row) for row in x]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _unit_inverse(v):
    if isinstance(v, LaurentPoly):
        if not v.is_unit():
            raise SingularMatrixError(f"determinant {v} is not a unit of the scalar ring")
        return v.inverse()
    if v in (1, -1):
        return v
    raise SingularMatrixError(f"determinant {v} is not a unit of the scalar ring")


def mat_inverse(x: np.ndarray, cond_limit: float = 1e12) -> np.ndarray:
    """Inverse matrix.

    Exact: adjugate over the determinant, which must be a unit of
    Z[i][A, A^-1]. Numeric: ``numpy.linalg.inv`` after a condition check.
    """
    n = _check_square(x)
    if scalar_kind(x) == "numeric":
        if not np.isfinite(np.linalg.cond(x)) or np.linalg.cond(x) > cond_limit:
            raise SingularMatrixError("matrix is singular or badly conditioned")
        return np.linalg.inv(x)
    det = mat_det(x)
    if _is_zero(det):
        raise SingularMatrixError("matrix is singular")
    dinv = _unit_inverse(det)
    out = np.empty((n, n), dtype=object)
    idx = list(range(n))
    for i in range(n):
        for j in range(n):
            minor = x[np.ix_([r for r in idx if r != j], [c for c in idx if c != i])]
            cof = mat_det(minor) if n > 1 else 1
            if (i + j) % 2:
                cof = -cof
            out[i, j] = cof * dinv
    return out


def partial_trace_second(x: np.ndarray, n: int) -> np.ndarray:
    """Trace out the second tensor factor: ``(Tr2 x)[a, c] = sum_b x[(a,b),(c,b)]``."""
    if x.shape != (n * n, n * n):
        raise ValueError(f"expected a {n*n}x{n*n} matrix, got {x.shape}")
    t = x.reshape(n, n, n, n)
    if scalar_kind(x) == "numeric":
        return np.einsum("abcb->ac", t)
    out = np.empty((n, n), dtype=object)
    for a in range(n):
        for c in range(n):
            total = 0
            for b in range(n):
                total = total + t[a, b, c, b]
            out[a, c] = total
    return out


def is_unitary(x: np.ndarray, tol: float = 1e-9) -> bool:
    n = _check_square(x)
    x = to_numeric(x) if scalar_kind(x) == "exact" else x
    return float(np.max(np.abs(x.conj().T @ x - np.eye(n)))) <= tol


def to_numeric(x: np.ndarray, a: complex | None = None) -> np.ndarray:
    """Evaluate an exact tensor at ``A = a`` (``a`` may be omitted for constants)."""
    if scalar_kind(x) == "numeric":
        return x
    out = np.empty(x.shape, dtype=complex)
    flat_in = x.reshape(-1)
    flat_out = out.reshape(-1)
    for k, v in enumerate(flat_in):
        if isinstance(v, LaurentPoly):
            if a is None:
                flat_out[k] = complex(v.constant())
            else:
                flat_out[k] = v.eval(a)
        else:
            flat_out[k] = complex(v)
    return out


def tensors_equal(x: np.ndarray, y: np.ndarray, tol: float = 1e-10) -> bool:
    if x.shape != y.shape:
        return False
    if scalar_kind(x) == "exact" and scalar_kind(y) == "exact":
        return all(u == v for u, v in zip(x.reshape(-1), y.reshape(-1)))
    return max_residual(x, y) <= tol


def max_residual(x: np.ndarray, y: np.ndarray) -> float:
    """Largest entrywise modulus of ``x - y``; exact tensors report 0 or inf."""
    if scalar_kind(x) == "exact" and scalar_kind(y) == "exact":
        return 0.0 if tensors_equal(x, y) else float("inf")
    return float(np.max(np.abs(to_numeric(x) - to_numeric(y)))) if x.size else 0.0


def swap_matrix(n: int, kind: ScalarKind = "exact") -> np.ndarray:
    """The flip ``S(x (x) y) = y (x) x`` on ``V (x) V``."""
    out = np.zeros((n * n, n * n), dtype=object if kind == "exact" else complex)
    if kind == "exact":
        out[...] = 0
    for a in range(n):
        for b in range(n):
            out[a * n + b, b * n + a] = 1
    return out


def tensor_to_json(x: np.ndarray) -> dict:
    if scalar_kind(x) == "exact":
        entries = [LaurentPoly.coerce(v).to_json() for v in x.reshape(-1)]
        return {"shape": list(x.shape), "kind": "exact", "entries": entries}
    entries = [[float(v.real), float(v.imag)] for v in x.reshape(-1)]
    return {"shape": list(x.shape), "kind": "numeric", "entries": entries}


def tensor_from_json(data: dict | str) -> np.ndarray:
    if isinstance(data, str):
        data = json.loads(data)
    shape = tuple(int(s) for s in data["shape"])
    entries = data["entries"]
    size = int(np.prod(shape)) if shape else 1
    if len(entries) != size:
        raise ValueError(f"expected {size} entries for shape {shape}, got {len(entries)}")
    kind = data.get("kind")
    if kind is None:
        # [re, im] pairs of numbers are numeric; lists of triples are exact
        kind = "numeric" if entries and all(
            len(e) == 2 and all(isinstance(v, (int, float)) for v in e) for e in entries
        ) else "exact"
    if kind == "exact":
        flat = np.empty(size, dtype=object)
        for k, e in enumerate(entries):
            flat[k] = LaurentPoly.from_json(e)
        return flat.reshape(shape)
    if kind != "numeric":
        raise ValueError(f"unknown tensor kind {kind!r}")
    return np.array([complex(r, i) for r, i in entries], dtype=complex).reshape(shape)
