"""Bracket polynomial by brute-force state expansion.

Independent of the transfer-matrix engine: every crossing is smoothed both
ways, loops are counted with union-find over arc pieces, and the weighted
states are summed. The result carries one extra loop factor so it matches
the closed amplitude of the bracket model (a lone circle gives
``-A^2 - A^-2``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .diagram import EventKind, MorseDiagram, MorseEvent, writhe
from .scalar_ring import LaurentPoly

__all__ = [
    "MAX_CROSSINGS",
    "OracleError",
    "skein_bracket",
    "normalized_skein",
    "state_loop_counts",
    "smoothed_diagram",
]

MAX_CROSSINGS = 16

DELTA = LaurentPoly({2: -1, -2: -1})


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class _Skeleton:
    n_nodes: int
    fixed: tuple[tuple[int, int], ...]  # unions made by caps
    crossings: tuple[tuple[int, int, int, int, bool], ...]  # (a, b, c, d, positive)


def _skeleton(d: MorseDiagram) -> _Skeleton:
    if d.initial_width or d.final_width:
        raise OracleError("the oracle needs a closed diagram")
    slots: list[int] = []
    n = 0
    fixed = []
    crossings = []
    for ev in d.events:
        p = ev.position
        if ev.kind is EventKind.CUP:
            if p > len(slots):
                raise OracleError(f"invalid event {ev}")
            slots[p:p] = [n, n]  # one arc piece occupies both legs
            n += 1
        elif ev.kind is EventKind.CAP:
            if p + 1 >= len(slots):
                raise OracleError(f"invalid event {ev}")
            fixed.append((slots[p], slots[p + 1]))
            del slots[p : p + 2]
        elif ev.kind is EventKind.VIRTUAL:
            raise OracleError("virtual crossings have no skein expansion here")
        else:
            if p + 1 >= len(slots):
                raise OracleError(f"invalid event {ev}")
            a, b = slots[p], slots[p + 1]
            c, e = n, n + 1
            n += 2
            crossings.append((a, b, c, e, ev.kind is EventKind.CROSS_POS))
            slots[p], slots[p + 1] = c, e
    if slots:
        raise OracleError("diagram does not close up")
    return _Skeleton(n, tuple(fixed), tuple(crossings))


def _count_loops(sk: _Skeleton, mask: int) -> int:
    parent = list(range(sk.n_nodes))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for x, y in sk.fixed:
        union(x, y)
    for k, (a, b, c, e, _) in enumerate(sk.crossings):
        if mask >> k & 1:  # horizontal: top ends joined, bottom ends joined
            union(a, b)
            union(c, e)
        else:  # vertical: each top end continues straight down
            union(a, c)
            union(b, e)
    return sum(1 for x in range(sk.n_nodes) if find(x) == x)


def state_loop_counts(d: MorseDiagram) -> list[tuple[int, int, int]]:
    """``(mask, A-exponent, loops)`` for every state.

    Bit ``k`` of ``mask`` set means crossing ``k`` (in time order) is smoothed
    horizontally. A positive crossing weighs ``A`` vertically and ``A^-1``
    horizontally; a negative crossing the reverse.
    """
    sk = _skeleton(d)
    c = len(sk.crossings)
    if c > MAX_CROSSINGS:
        raise OracleError(f"{c} crossings exceeds the oracle limit of {MAX_CROSSINGS}")
    out = []
    for mask in range(1 << c):
        e = 0
        for k, cr in enumerate(sk.crossings):
            horizontal = mask >> k & 1
            e += (-1 if horizontal else 1) * (1 if cr[4] else -1)
        out.append((mask, e, _count_loops(sk, mask)))
    return out


def skein_bracket(d: MorseDiagram) -> LaurentPoly:
    """Sum over states of ``A^e * delta^(loops - 1)``, times ``delta``."""
    tally = Counter((e, loops) for _, e, loops in state_loop_counts(d))
    total = LaurentPoly()
    for (e, loops), mult in sorted(tally.items()):
        total = total + LaurentPoly({e: mult}) * DELTA ** (loops - 1)
    return total * DELTA


def normalized_skein(d: MorseDiagram) -> LaurentPoly:
    """``(-A^3)^(-w) * skein_bracket(d)``."""
    w = writhe(d)
    return LaurentPoly({-3 * w: -1 if w % 2 else 1}) * skein_bracket(d)


def smoothed_diagram(d: MorseDiagram, mask: int) -> MorseDiagram:
    """The crossingless diagram of one state, as Morse events.

    A vertical smoothing drops the crossing; a horizontal one becomes a cap
    followed by a cup at the same position.
    """
    events = []
    k = 0
    for ev in d.events:
        if ev.kind in (EventKind.CROSS_POS, EventKind.CROSS_NEG):
            if mask >> k & 1:
                events += [MorseEvent(EventKind.CAP, ev.position), MorseEvent(EventKind.CUP, ev.position)]
            k += 1
        else:
            events.append(ev)
    return MorseDiagram(tuple(events), d.initial_width)
