"""Slice-by-slice evaluation of Morse diagrams against a tangle model.

The state after each event is a vector over ``V^(x)k`` for the current width
``k``. Exact models keep it as a sparse map from index tuples to ring
elements; numeric models keep a dense complex array of shape ``(n,)*k``.
Each event is applied as a local update on the affected factors only.

Cost per event is proportional to the number of live basis states, at most
``n**k``; memory likewise. ``width_cap`` bounds ``k``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .diagram import (
    DiagramError,
    EventKind,
    MorseDiagram,
    crossing_signs,
    seifert_count,
    validate,
)
from .linalg import identity, mat_mul
from .scalar_ring import LaurentPoly

if TYPE_CHECKING:
    from .models import TangleModel

__all__ = [
    "DEFAULT_WIDTH_CAP",
    "WidthOverflowError",
    "UnsupportedNormalizationError",
    "transfer",
    "evaluate",
    "normalized",
    "bracket_polynomial",
    "oriented_closed_form",
    "ClosedForm",
]

DEFAULT_WIDTH_CAP = {1: 64, 2: 12, 3: 8}


class WidthOverflowError(RuntimeError):
    pass


class UnsupportedNormalizationError(ValueError):
    pass


def _cap_for(model: TangleModel, width_cap: int | None) -> int:
    if width_cap is not None:
        return width_cap
    return DEFAULT_WIDTH_CAP.get(model.dim, 6)


def _nonzero_rows(t: np.ndarray, n: int) -> dict[tuple[int, int], list[tuple[int, int, object]]]:
    """Crossing tensor as ``(a, b) -> [(c, d, value), ...]`` over nonzero entries."""
    rows: dict[tuple[int, int], list] = {}
    for a in range(n):
        for b in range(n):
            r = t[a * n + b]
            rows[(a, b)] = [(c, d, r[c * n + d]) for c in range(n) for d in range(n) if r[c * n + d] != 0]
    return rows


def _tensor_for(model: TangleModel, kind: EventKind) -> np.ndarray:
    if kind is EventKind.CROSS_POS:
        return model.R
    if kind is EventKind.CROSS_NEG:
        return model.Rbar
    if model.virtual is None:
        raise DiagramError(f"model {model.name!r} has no virtual tensor")
    return model.virtual


def _sparse_run(d: MorseDiagram, model: TangleModel, start: dict, cap: int) -> dict:
    n = model.dim
    cup_terms = [(a, b, model.cup[a, b]) for a in range(n) for b in range(n) if model.cup[a, b] != 0]
    cap_mat = model.cap
    tables: dict[EventKind, dict] = {}
    state = start
    width = d.initial_width
    for ev in d.events:
        p = ev.position
        kind = ev.kind
        new: dict = defaultdict(int)
        if kind is EventKind.CUP:
            width += 2
            if width > cap:
                raise WidthOverflowError(f"diagram width {width} exceeds cap {cap}")
            for key, v in state.items():
                left, right = key[:p], key[p:]
                for a, b, m in cup_terms:
                    new[left + (a, b) + right] += v * m
        elif kind is EventKind.CAP:
            width -= 2
            for key, v in state.items():
                m = cap_mat[key[p], key[p + 1]]
                if m != 0:
                    new[key[:p] + key[p + 2 :]] += v * m
        else:
            table = tables.get(kind)
            if table is None:
                table = tables[kind] = _nonzero_rows(_tensor_for(model, kind), n)
            for key, v in state.items():
                left, right = key[:p], key[p + 2 :]
                for c, dd, m in table[(key[p], key[p + 1])]:
                    new[left + (c, dd) + right] += v * m
        state = {k: v for k, v in new.items() if v != 0}
    return state


def _dense_run(d: MorseDiagram, model: TangleModel, start: np.ndarray, cap: int) -> np.ndarray:
    n = model.dim
    state = start
    width = d.initial_width
    lead = state.shape[:1]  # batch axis for open diagrams
    cup = np.asarray(model.cup, dtype=complex)
    cap_m = np.asarray(model.cap, dtype=complex)
    for ev in d.events:
        p = ev.position
        if ev.kind is EventKind.CUP:
            if width + 2 > cap:
                raise WidthOverflowError(f"diagram width {width + 2} exceeds cap {cap}")
            s = state.reshape(lead + (n**p, n ** (width - p)))
            state = np.einsum("zlr,ab->zlabr", s, cup)
            width += 2
        elif ev.kind is EventKind.CAP:
            s = state.reshape(lead + (n**p, n, n, n ** (width - p - 2)))
            state = np.einsum("zlabr,ab->zlr", s, cap_m)
            width -= 2
        else:
            t = np.asarray(_tensor_for(model, ev.kind), dtype=complex).reshape(n, n, n, n)
            s = state.reshape(lead + (n**p, n, n, n ** (width - p - 2)))
            state = np.einsum("zlabr,abcd->zlcdr", s, t)
        state = state.reshape(lead + (n**width,))
    return state


def transfer(d: MorseDiagram, model: TangleModel, width_cap: int | None = None) -> np.ndarray:
    """Matrix of the diagram as an operator ``V^(x)k_in -> V^(x)k_out``.

    Row index: top boundary state; column index: bottom boundary state. A
    closed diagram gives a 1x1 matrix holding its amplitude.
    """
    validate(d)
    cap = _cap_for(model, width_cap)
    n = model.dim
    k_in, k_out = d.initial_width, d.final_width
    if max(k_in, k_out) > cap:
        raise WidthOverflowError(f"boundary width exceeds cap {cap}")
    rows, cols = n**k_in, n**k_out
    if model.kind == "numeric":
        start = np.eye(rows, dtype=complex)
        return _dense_run(d, model, start, cap).reshape(rows, cols)
    out = np.empty((rows, cols), dtype=object)
    out[...] = 0
    for r in range(rows):
        key = tuple(int(x) for x in np.unravel_index(r, (n,) * k_in)) if k_in else ()
        final = _sparse_run(d, model, {key: 1}, cap)
        for fk, v in final.items():
            c = int(np.ravel_multi_index(fk, (n,) * k_out)) if k_out else 0
            out[r, c] = v
    return out


def evaluate(d: MorseDiagram, model: TangleModel, width_cap: int | None = None):
    """Vacuum-to-vacuum amplitude ``Z`` of a closed diagram."""
    validate(d)
    if not d.is_closed:
        raise DiagramError("evaluate needs a closed diagram")
    z = transfer(d, model, width_cap)[0, 0]
    if model.kind == "exact" and not isinstance(z, LaurentPoly):
        z = LaurentPoly.const(z) if model.ring == "laurent" else int(z)
    return z


def normalized(d: MorseDiagram, model: TangleModel, width_cap: int | None = None):
    """``curl_pos**(-w) * Z`` for models whose curl factor is a scalar unit."""
    if model.normalization != "writhe_monomial":
        raise UnsupportedNormalizationError(
            f"model {model.name!r} has a matrix-valued curl factor; compare raw values at equal writhe"
        )
    z = evaluate(d, model, width_cap)
    w = sum(s for _, s in crossing_signs(d))
    c = model.curl_pos
    if model.kind == "numeric":
        return z * complex(c) ** (-w)
    return LaurentPoly.coerce(c) ** (-w) * z


def bracket_polynomial(d: MorseDiagram, model: TangleModel, width_cap: int | None = None) -> LaurentPoly:
    """Amplitude divided by the loop value, so a lone circle gives 1."""
    z = LaurentPoly.coerce(evaluate(d, model, width_cap))
    return z.divexact(model.loop_value)


@dataclass(frozen=True)
class ClosedForm:
    case: str
    seifert_circles: int
    writhe: int
    positive: int
    negative: int
    exponent: int
    value: object

    def to_json(self) -> dict:
        v = self.value
        if isinstance(v, np.ndarray):
            value = [[int(x) for x in row] for row in v]
        else:
            value = LaurentPoly.coerce(v).to_json()
        return {
            "case": self.case,
            "SC": self.seifert_circles,
            "w": self.writhe,
            "P": self.positive,
            "N": self.negative,
            "exponent": self.exponent,
            "value": value,
        }


def oriented_closed_form(d: MorseDiagram, case: str, s=None) -> ClosedForm:
    """Closed-form oriented invariants from diagram combinatorics.

    ``case="product"``: ``delta**(SC - w - 1)`` with ``delta = s**2``
    (``s`` a fourth root of unity, default ``i``). ``case="swap"``:
    ``(FG)**(w + N - P)`` with ``F``, ``G`` the swap-model matrices.
    """
    validate(d)
    signs = [s_ for _, s_ in crossing_signs(d)]
    pos = sum(1 for x in signs if x > 0)
    neg = len(signs) - pos
    w = pos - neg
    sc = seifert_count(d)
    if case == "product":
        s_val = LaurentPoly.const((0, 1)) if s is None else LaurentPoly.coerce(s)
        delta = s_val * s_val
        e = sc - w - 1
        return ClosedForm("product", sc, w, pos, neg, e, delta**e)
    if case == "swap":
        from .models import FG_MATRIX

        e = w + neg - pos
        fg = FG_MATRIX
        val = identity(3)
        step = fg if e >= 0 else fg.T  # FG is an involution; FG^-1 = FG^T = FG
        for _ in range(abs(e)):
            val = mat_mul(val, step)
        return ClosedForm("swap", sc, w, pos, neg, e, val)
    raise ValueError(f"unknown closed-form case {case!r}")
