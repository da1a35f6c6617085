"""Consistency checks for tangle models and entanglement of two-qubit gates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .linalg import (
    SingularMatrixError,
    identity,
    kron,
    mat_det,
    mat_inverse,
    max_residual,
    partial_trace_second,
    scalar_kind,
    swap_matrix,
    tensors_equal,
    to_numeric,
)
from .scalar_ring import LaurentPoly

__all__ = [
    "check_ybe",
    "check_model",
    "ModelReport",
    "EquationResult",
    "EntanglementVerdict",
    "Decomposition",
    "is_entangling_2q",
    "realign",
    "check_enhancement",
    "mu_from_cupcap",
    "solve_mu",
    "MuSolveResult",
    "WITNESS_CANDIDATES",
]


def _dim_of(R: np.ndarray) -> int:
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ValueError("R must be a square matrix")
    n = math.isqrt(R.shape[0])
    if n * n != R.shape[0]:
        raise ValueError(f"R has size {R.shape[0]}, not a perfect square")
    return n


def _compare(lhs: np.ndarray, rhs: np.ndarray, tol: float) -> tuple[bool, float]:
    if scalar_kind(lhs) == "exact" and scalar_kind(rhs) == "exact":
        ok = tensors_equal(lhs, rhs)
        return ok, 0.0 if ok else float("inf")
    r = max_residual(lhs, rhs)
    return r <= tol, r


def _ybe_sides(R: np.ndarray, S: np.ndarray, T: np.ndarray):
    n = _dim_of(R)
    I = identity(n, scalar_kind(R))
    lhs = kron(R, I) @ kron(I, S) @ kron(T, I)
    rhs = kron(I, T) @ kron(S, I) @ kron(I, R)
    return lhs, rhs


def check_ybe(R: np.ndarray, tol: float = 1e-10) -> bool | float:
    """Exact tensors: bool. Numeric tensors: the max entrywise residual."""
    lhs, rhs = _ybe_sides(R, R, R)
    ok, res = _compare(lhs, rhs, tol)
    return ok if scalar_kind(R) == "exact" else res


@dataclass
class EquationResult:
    name: str
    passed: bool
    residual: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "residual": self.residual}


@dataclass
class ModelReport:
    model: str
    equations: list[EquationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.equations)

    def __getitem__(self, name: str) -> EquationResult:
        for e in self.equations:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"model": self.model, "passed": self.passed, "equations": [e.to_json() for e in self.equations]}


def _slide_min(cup, T, U, n, kind):
    """Cup then crossing ``T`` on its left leg vs cup then ``U`` on its right leg.

    ``sum_i cup[i,e] T[(x,i),(c,d)] == sum_j cup[c,j] U[(j,x),(d,e)]``
    """
    lhs = np.zeros((n,) * 4, dtype=object if kind == "exact" else complex)
    rhs = np.zeros_like(lhs)
    if kind == "exact":
        lhs[...] = 0
        rhs[...] = 0
    for x in range(n):
        for c in range(n):
            for d in range(n):
                for e in range(n):
                    l = 0
                    r = 0
                    for i in range(n):
                        l = l + cup[i, e] * T[x * n + i, c * n + d]
                        r = r + cup[c, i] * U[i * n + x, d * n + e]
                    lhs[x, c, d, e] = l
                    rhs[x, c, d, e] = r
    return lhs, rhs


def _slide_max(cap, T, U, n, kind):
    """``sum_i T[(c,d),(x,i)] cap[i,e] == sum_j U[(d,e),(j,x)] cap[c,j]``"""
    lhs = np.zeros((n,) * 4, dtype=object if kind == "exact" else complex)
    rhs = np.zeros_like(lhs)
    if kind == "exact":
        lhs[...] = 0
        rhs[...] = 0
    for x in range(n):
        for c in range(n):
            for d in range(n):
                for e in range(n):
                    l = 0
                    r = 0
                    for i in range(n):
                        l = l + T[c * n + d, x * n + i] * cap[i, e]
                        r = r + U[d * n + e, i * n + x] * cap[c, i]
                    lhs[x, c, d, e] = l
                    rhs[x, c, d, e] = r
    return lhs, rhs


def check_model(model, tol: float = 1e-10) -> ModelReport:
    """Check the tensor equations behind invariance under the Morse moves.

    Always: cup/cap inverse (both zigzags), R*Rbar = I (both orders), YBE,
    slides of both crossing types over minima and maxima. With a virtual
    tensor S additionally: S^2 = I, YBE for S, the mixed relations
    ``(S x I)(I x S)(R x I) = (I x R)(S x I)(I x S)`` for R and Rbar, and
    slides of S.
    """
    n = model.dim
    kind = model.kind
    report = ModelReport(model.name)
    add = report.equations.append
    I_n = identity(n, kind)
    I_nn = identity(n * n, kind)

    def eq(name, lhs, rhs):
        ok, res = _compare(lhs, rhs, tol)
        add(EquationResult(name, bool(ok), float(res)))

    eq("cup_cap_inverse", model.cap @ model.cup, I_n)
    eq("cap_cup_inverse", model.cup @ model.cap, I_n)
    eq("R_Rbar_identity", model.R @ model.Rbar, I_nn)
    eq("Rbar_R_identity", model.Rbar @ model.R, I_nn)
    eq("yang_baxter", *_ybe_sides(model.R, model.R, model.R))
    for label, T, U in (("R", model.R, model.Rbar), ("Rbar", model.Rbar, model.R)):
        eq(f"slide_min_{label}", *_slide_min(model.cup, T, U, n, kind))
        eq(f"slide_max_{label}", *_slide_max(model.cap, T, U, n, kind))
    S = model.virtual
    if S is not None:
        eq("virtual_involution", S @ S, I_nn)
        eq("virtual_yang_baxter", *_ybe_sides(S, S, S))
        for label, T in (("R", model.R), ("Rbar", model.Rbar)):
            lhs = kron(S, I_n) @ kron(I_n, S) @ kron(T, I_n)
            rhs = kron(I_n, T) @ kron(S, I_n) @ kron(I_n, S)
            eq(f"mixed_yang_baxter_{label}", lhs, rhs)
        eq("virtual_slide_min", *_slide_min(model.cup, S, S, n, kind))
        eq("virtual_slide_max", *_slide_max(model.cap, S, S, n, kind))
    return report


# ---------------------------------------------------------------------------
# Entanglement


@dataclass
class Decomposition:
    form: Literal["Product", "Swap"]
    A: np.ndarray
    B: np.ndarray

    def reconstruct(self) -> np.ndarray:
        m = kron(self.A, self.B)
        if self.form == "Swap":
            m = m @ swap_matrix(self.A.shape[0], scalar_kind(m))
        return m


@dataclass
class EntanglementVerdict:
    entangling: bool
    witness: tuple | None = None
    witness_determinant: complex | None = None
    decomposition: Decomposition | None = None

    def to_json(self) -> dict:
        out: dict = {"entangling": self.entangling}
        if self.witness is not None:
            out["witness"] = [[float(np.real(v)), float(np.imag(v))] for v in self.witness]
            det = complex(self.witness_determinant)
            out["witness_determinant"] = [det.real, det.imag]
        if self.decomposition is not None:
            from .linalg import tensor_to_json

            out["decomposition"] = {
                "form": self.decomposition.form,
                "A": tensor_to_json(self.decomposition.A),
                "B": tensor_to_json(self.decomposition.B),
            }
        return out


def realign(M: np.ndarray, n: int = 2) -> np.ndarray:
    """``R[(i,k),(j,l)] = M[(i,j),(k,l)]``; rank one iff ``M`` is a Kronecker product."""
    t = M.reshape(n, n, n, n)
    return t.transpose(0, 2, 1, 3).reshape(n * n, n * n)


def _rank_le_one(R: np.ndarray, tol: float) -> bool:
    if scalar_kind(R) == "exact":
        m = R.shape[0]
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(m):
                    for l in range(k + 1, m):
                        if R[i, k] * R[j, l] - R[i, l] * R[j, k] != 0:
                            return False
        return True
    s = np.linalg.svd(R, compute_uv=False)
    return s[0] == 0 or s[1] <= tol * s[0]


def _factor(R: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Split a rank-one realigned matrix as ``vec(A) vec(B)^T``; first nonzero of A is 1."""
    exact_kind = scalar_kind(R) == "exact"
    nz = (lambda v: v != 0) if exact_kind else (lambda v: abs(v) > 1e-12 * np.max(np.abs(R)))
    flat = R.reshape(-1)
    col_idx = next(k for k, v in enumerate(flat) if nz(v)) % R.shape[1]
    col = R[:, col_idx]
    k0 = next(k for k, v in enumerate(col) if nz(v))
    lead = col[k0]
    b = R[k0, :].copy()  # R[k, l] = col[k] * R[k0, l] / lead
    if exact_kind:
        try:
            a = np.array([LaurentPoly.coerce(v).divexact(lead) for v in col], dtype=object)
        except ArithmeticError:
            return _factor(to_numeric(R), n)
    else:
        a = col / lead
    return a.reshape(n, n), b.reshape(n, n)


WITNESS_CANDIDATES: tuple[tuple[complex, complex], ...] = (
    (1 / math.sqrt(2), 1 / math.sqrt(2)),
    (1, 0),
    (0, 1),
    (1 / math.sqrt(2), -1 / math.sqrt(2)),
    (1 / math.sqrt(2), 1j / math.sqrt(2)),
    (1 / math.sqrt(2), -1j / math.sqrt(2)),
)


def is_entangling_2q(M: np.ndarray, tol: float = 1e-10) -> EntanglementVerdict:
    """Decide whether a 4x4 gate sends every product state to a product state.

    Product form ``A (x) B`` and swap form ``(A (x) B) S`` are detected by
    rank of the realigned matrix. Otherwise a witness product state is
    searched among simple candidates. The witness is ``(x, y, z, w)`` for the
    state ``(x|0> + y|1>) (x) (z|0> + w|1>)``; the image amplitudes
    ``(a, b, c, d)`` on ``|00>, |01>, |10>, |11>`` have ``ad - bc != 0``.
    Column-vector convention: state ``v`` maps to ``M v``.
    """
    if M.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    det = mat_det(M)
    if (scalar_kind(M) == "exact" and det == 0) or (scalar_kind(M) == "numeric" and abs(det) <= tol):
        raise SingularMatrixError("gate is singular")
    for form, X in (("Product", M), ("Swap", M @ swap_matrix(2, scalar_kind(M)))):
        R = realign(X)
        if _rank_le_one(R, tol):
            a, b = _factor(R, 2)
            return EntanglementVerdict(False, decomposition=Decomposition(form, a, b))
    num = to_numeric(M)
    rng = np.random.default_rng(0)
    grid = [(np.array(x, dtype=complex), np.array(y, dtype=complex)) for x in WITNESS_CANDIDATES for y in WITNESS_CANDIDATES]
    for k in range(len(grid) + 1000):
        if k < len(grid):
            x, y = grid[k]
        else:
            x = rng.normal(size=2) + 1j * rng.normal(size=2)
            y = rng.normal(size=2) + 1j * rng.normal(size=2)
            x, y = x / np.linalg.norm(x), y / np.linalg.norm(y)
        img = num @ np.kron(x, y)
        d = img[0] * img[3] - img[1] * img[2]
        if abs(d) > tol:
            w = tuple(complex(v) for v in (*x, *y))
            return EntanglementVerdict(True, witness=w, witness_determinant=complex(d))
    # not rank one yet no witness found: report entangling without a witness
    return EntanglementVerdict(True)


# ---------------------------------------------------------------------------
# Enhancement


def check_enhancement(R: np.ndarray, mu: np.ndarray, tol: float = 1e-10) -> bool:
    """``mu (x) mu`` commutes with R and ``Tr2(R (mu x mu)) = Tr2(Rbar (mu x mu)) = mu``."""
    n = _dim_of(R)
    Rbar = mat_inverse(R)
    mm = kron(mu, mu)
    checks = [
        (R @ mm, mm @ R),
        (partial_trace_second(R @ mm, n), mu),
        (partial_trace_second(Rbar @ mm, n), mu),
    ]
    return all(_compare(l, r, tol)[0] for l, r in checks)


def mu_from_cupcap(M: np.ndarray) -> np.ndarray:
    """``mu = M N^T`` where ``N = M^-1``; entries over the determinant."""
    if M.shape != (2, 2):
        raise ValueError("expected a 2x2 cup matrix")
    N = mat_inverse(M)
    return M @ N.T


@dataclass
class MuSolveResult:
    feasible: bool
    groebner_basis: list[str]
    forced_zero_determinant: bool
    delta_power: int | None = None  # smallest k with Delta**k in the ideal

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "groebner_basis": self.groebner_basis,
            "forced_zero_determinant": self.forced_zero_determinant,
            "delta_power": self.delta_power,
        }


def solve_mu(target=((1, 0), (0, -1))) -> MuSolveResult:
    """Is there an invertible cup matrix ``[[a, b], [c, d]]`` whose mu is ``target``?

    Clears the determinant from the displayed formula, adds ``Delta * t = 1``
    for invertibility and computes a Groebner basis over Q(i). The system is
    infeasible iff the basis is ``{1}``. ``forced_zero_determinant`` is set
    when a power of ``Delta`` reduces to zero modulo the bare equations.
    """
    import sympy as sp

    a, b, c, d, t = sp.symbols("a b c d t")
    delta = a * d - b * c
    numer = sp.Matrix([[a * d - b**2, -a * c + a * b], [c * d - b * d, -(c**2) + a * d]])
    tgt = sp.Matrix(target)
    eqs = [sp.expand(numer[i, j] - tgt[i, j] * delta) for i in range(2) for j in range(2)]
    G = sp.groebner(eqs + [delta * t - 1], a, b, c, d, t, order="grevlex")
    feasible = not (len(G.exprs) == 1 and G.exprs[0] == 1)
    # explicit certificate: some power of Delta lies in the ideal of the equations
    G0 = sp.groebner(eqs, a, b, c, d, order="grevlex")
    power = next((k for k in range(1, 5) if G0.reduce(sp.expand(delta**k))[1] == 0), None)
    return MuSolveResult(feasible, [str(g) for g in G.exprs], power is not None, power)
