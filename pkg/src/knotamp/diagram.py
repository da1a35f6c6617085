"""Morse diagrams: time-ordered cups, caps and crossings.

Time runs from the top of the diagram to the bottom. A horizontal slice
meets ``width`` strands, numbered 0.. from the left. Events:

``U<p>``  cup: two new strands appear at positions p, p+1 (creation)
``A<p>``  cap: strands p, p+1 are joined and disappear (annihilation)
``X<p>``  positive crossing of strands p, p+1
``Y<p>``  negative crossing of strands p, p+1
``V<p>``  virtual crossing of strands p, p+1

Crossings carry the strand from the top-left to the bottom-right and the
strand from the top-right to the bottom-left. A crossing is positive when its
two strands run the same vertical direction and it is an ``X``, or when they
run opposite directions and it is a ``Y``; that is the oriented sign used by
:func:`writhe`.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

__all__ = [
    "EventKind",
    "MorseEvent",
    "MorseDiagram",
    "MoveKind",
    "MorseMove",
    "DiagramError",
    "MoveError",
    "validate",
    "writhe",
    "crossing_signs",
    "components",
    "orientation",
    "seifert_count",
    "apply_move",
    "applicable_moves",
    "random_equivalent",
    "parse_morse",
    "circle",
    "unlink",
    "curl_unknot",
    "mirror",
]


class DiagramError(ValueError):
    pass


class MoveError(ValueError):
    pass


class EventKind(str, enum.Enum):
    CUP = "U"
    CAP = "A"
    CROSS_POS = "X"
    CROSS_NEG = "Y"
    VIRTUAL = "V"

    @property
    def is_crossing(self) -> bool:
        return self in (EventKind.CROSS_POS, EventKind.CROSS_NEG, EventKind.VIRTUAL)

    @property
    def arity(self) -> tuple[int, int]:
        """(strands consumed, strands produced)."""
        if self is EventKind.CUP:
            return 0, 2
        if self is EventKind.CAP:
            return 2, 0
        return 2, 2


_FLIP = {
    EventKind.CROSS_POS: EventKind.CROSS_NEG,
    EventKind.CROSS_NEG: EventKind.CROSS_POS,
    EventKind.VIRTUAL: EventKind.VIRTUAL,
}


@dataclass(frozen=True)
class MorseEvent:
    kind: EventKind
    position: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.position}"


@dataclass(frozen=True)
class MorseDiagram:
    events: tuple[MorseEvent, ...] = ()
    initial_width: int = 0

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def is_closed(self) -> bool:
        return self.initial_width == 0 and self.final_width == 0

    @property
    def final_width(self) -> int:
        w = self.initial_width
        for ev in self.events:
            i, o = ev.kind.arity
            w += o - i
        return w

    @property
    def max_width(self) -> int:
        return max([self.initial_width, *validate(self)])

    def crossings(self) -> list[int]:
        return [k for k, ev in enumerate(self.events) if ev.kind.is_crossing]

    def has_virtual(self) -> bool:
        return any(ev.kind is EventKind.VIRTUAL for ev in self.events)

    def to_word(self) -> str:
        return ",".join(str(ev) for ev in self.events)

    def to_json(self) -> dict:
        return {
            "initial_width": self.initial_width,
            "events": [[ev.kind.value, ev.position] for ev in self.events],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> MorseDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            events = tuple(MorseEvent(EventKind(k), int(p)) for k, p in data["events"])
        except (KeyError, ValueError, TypeError) as exc:
            raise DiagramError(f"malformed diagram JSON: {exc}") from exc
        d = cls(events, int(data.get("initial_width", 0)))
        validate(d)
        return d

    def __str__(self) -> str:
        return self.to_word() or "<empty>"


def parse_morse(text: str, initial_width: int = 0) -> MorseDiagram:
    """Parse a Morse word such as ``U0,U1,X0,X0,X0,A1,A0``."""
    events = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        try:
            kind = EventKind(tok[0].upper())
            pos = int(tok[1:])
        except (ValueError, IndexError):
            raise DiagramError(f"bad Morse token {tok!r}") from None
        if pos < 0:
            raise DiagramError(f"negative position in {tok!r}")
        events.append(MorseEvent(kind, pos))
    d = MorseDiagram(tuple(events), initial_width)
    validate(d)
    return d


def validate(d: MorseDiagram) -> list[int]:
    """Running width after each event; raises :class:`DiagramError` if invalid."""
    if d.initial_width < 0:
        raise DiagramError("negative initial width")
    w = d.initial_width
    trace = []
    for k, ev in enumerate(d.events):
        p = ev.position
        if p < 0:
            raise DiagramError(f"event {k} ({ev}) has negative position")
        if ev.kind is EventKind.CUP:
            if p > w:
                raise DiagramError(f"event {k} ({ev}) inserts past the right edge (width {w})")
            w += 2
        elif ev.kind is EventKind.CAP:
            if p + 1 >= w:
                raise DiagramError(f"event {k} ({ev}) caps missing strands (width {w})")
            w -= 2
        else:
            if p + 1 >= w:
                raise DiagramError(f"event {k} ({ev}) crosses off the edge (width {w})")
        trace.append(w)
    return trace


def _require_closed(d: MorseDiagram) -> None:
    validate(d)
    if not d.is_closed:
        raise DiagramError("operation needs a closed diagram (zero width at both ends)")


# ---------------------------------------------------------------------------
# Segment graph
#
# Each strand piece between two events is a segment with a top end (2*s) and
# a bottom end (2*s + 1). Events glue ends together.


@dataclass
class _Crossing:
    event: int
    kind: EventKind
    a: int  # incoming top-left segment
    b: int  # incoming top-right segment
    c: int  # outgoing bottom-left segment
    d: int  # outgoing bottom-right segment


@dataclass
class _Graph:
    n_segments: int = 0
    links: list[tuple[int, int]] = field(default_factory=list)
    crossings: list[_Crossing] = field(default_factory=list)
    first_cup_left: list[int] = field(default_factory=list)  # left segment of each cup, in time order


def _build_graph(d: MorseDiagram) -> _Graph:
    validate(d)
    g = _Graph()
    slots: list[int] = []
    for _ in range(d.initial_width):
        slots.append(g.n_segments)
        g.n_segments += 1

    def new() -> int:
        g.n_segments += 1
        return g.n_segments - 1

    for k, ev in enumerate(d.events):
        p = ev.position
        if ev.kind is EventKind.CUP:
            s1, s2 = new(), new()
            g.links.append((2 * s1, 2 * s2))
            g.first_cup_left.append(s1)
            slots[p:p] = [s1, s2]
        elif ev.kind is EventKind.CAP:
            a, b = slots[p], slots[p + 1]
            g.links.append((2 * a + 1, 2 * b + 1))
            del slots[p : p + 2]
        else:
            a, b = slots[p], slots[p + 1]
            c, dd = new(), new()
            g.links.append((2 * a + 1, 2 * dd))
            g.links.append((2 * b + 1, 2 * c))
            g.crossings.append(_Crossing(k, ev.kind, a, b, c, dd))
            slots[p], slots[p + 1] = c, dd
    return g


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def count(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


@dataclass(frozen=True)
class ComponentInfo:
    count: int
    labels: tuple[int, ...]  # component label of every segment


def components(d: MorseDiagram) -> ComponentInfo:
    """Connected components found by following arcs through every event."""
    _require_closed(d)
    g = _build_graph(d)
    dsu = _DSU(g.n_segments)
    for x, y in g.links:
        dsu.union(x // 2, y // 2)
    roots: dict[int, int] = {}
    labels = []
    for s in range(g.n_segments):
        labels.append(roots.setdefault(dsu.find(s), len(roots)))
    return ComponentInfo(len(roots), tuple(labels))


def orientation(d: MorseDiagram, reverse: Iterable[int] = ()) -> list[int]:
    """Vertical direction of every segment: +1 downward, -1 upward.

    Each component is traversed starting down the left leg of its first
    (topmost) cup. Components listed in ``reverse`` (by the labels of
    :func:`components`) are traversed the other way.
    """
    _require_closed(d)
    g = _build_graph(d)
    partner: dict[int, int] = {}
    for x, y in g.links:
        partner[x] = y
        partner[y] = x
    info = components(d)
    reverse = set(reverse)
    direction = [0] * g.n_segments
    for start in g.first_cup_left:
        if direction[start]:
            continue
        flip = -1 if info.labels[start] in reverse else 1
        seg, down = start, True
        while not direction[seg]:
            direction[seg] = flip if down else -flip
            exit_end = 2 * seg + 1 if down else 2 * seg
            nxt = partner[exit_end]
            seg, down = nxt // 2, nxt % 2 == 0
    return direction


def crossing_signs(d: MorseDiagram, reverse: Iterable[int] = ()) -> list[tuple[int, int]]:
    """(event index, oriented sign) for every classical crossing."""
    g = _build_graph(d)
    direction = orientation(d, reverse)
    out = []
    for cr in g.crossings:
        if cr.kind is EventKind.VIRTUAL:
            continue
        same = direction[cr.a] == direction[cr.b]
        base = 1 if cr.kind is EventKind.CROSS_POS else -1
        out.append((cr.event, base if same else -base))
    return out


def writhe(d: MorseDiagram, reverse: Iterable[int] = ()) -> int:
    """Sum of oriented crossing signs; virtual crossings contribute nothing."""
    return sum(s for _, s in crossing_signs(d, reverse))


def seifert_count(d: MorseDiagram, reverse: Iterable[int] = ()) -> int:
    """Number of Seifert circles.

    Every classical crossing is replaced by its orientation-respecting
    smoothing: strands running the same vertical direction are split into two
    vertical arcs, opposite directions give a cap/cup pair. Virtual crossings
    are left in place.
    """
    g = _build_graph(d)
    direction = orientation(d, reverse)
    dsu = _DSU(g.n_segments)
    crossing_links = set()
    for cr in g.crossings:
        crossing_links.add((2 * cr.a + 1, 2 * cr.d))
        crossing_links.add((2 * cr.b + 1, 2 * cr.c))
        if cr.kind is EventKind.VIRTUAL:
            dsu.union(cr.a, cr.d)
            dsu.union(cr.b, cr.c)
        elif direction[cr.a] == direction[cr.b]:
            dsu.union(cr.a, cr.c)
            dsu.union(cr.b, cr.d)
        else:
            dsu.union(cr.a, cr.b)
            dsu.union(cr.c, cr.d)
    for x, y in g.links:
        if (x, y) not in crossing_links:
            dsu.union(x // 2, y // 2)
    return dsu.count()


# ---------------------------------------------------------------------------
# Standard diagrams


def circle() -> MorseDiagram:
    return parse_morse("U0,A0")


def unlink(k: int) -> MorseDiagram:
    """``k`` disjoint circles side by side."""
    events = []
    for _ in range(k):
        events += [MorseEvent(EventKind.CUP, 0), MorseEvent(EventKind.CAP, 0)]
    return MorseDiagram(tuple(events))


def curl_unknot(w: int) -> MorseDiagram:
    """An unknot carrying ``|w|`` curls of sign ``sign(w)`` (writhe ``w``)."""
    kind = EventKind.CROSS_POS if w >= 0 else EventKind.CROSS_NEG
    events = [MorseEvent(EventKind.CUP, 0)]
    for _ in range(abs(w)):
        events += [MorseEvent(EventKind.CUP, 1), MorseEvent(kind, 0), MorseEvent(EventKind.CAP, 1)]
    events.append(MorseEvent(EventKind.CAP, 0))
    return MorseDiagram(tuple(events))


def mirror(d: MorseDiagram) -> MorseDiagram:
    """Exchange positive and negative crossings."""
    return MorseDiagram(tuple(MorseEvent(_FLIP.get(ev.kind, ev.kind), ev.position) for ev in d.events), d.initial_width)


# ---------------------------------------------------------------------------
# Morse moves


class MoveKind(str, enum.Enum):
    MIN_MAX_CANCEL = "MinMaxCancel"
    REIDEMEISTER_II = "ReidemeisterII"
    REIDEMEISTER_III = "ReidemeisterIII"
    SLIDE_OVER_MIN = "SlideOverMin"
    SLIDE_OVER_MAX = "SlideOverMax"
    DISTANT_EXCHANGE = "DistantExchange"
    VIRTUAL_II = "VirtualII"
    VIRTUAL_III = "VirtualIII"
    MIXED_III = "MixedIII"


@dataclass(frozen=True)
class MorseMove:
    """A local rewrite at event index ``location``.

    ``direction="apply"`` removes or rewrites the matched pattern;
    ``"inverse"`` runs the move backwards. Inverse moves that insert events
    (min-max pairs, Reidemeister II pairs) use ``location`` as the insertion
    slot and need ``position`` and a ``variant`` (0 or 1) choosing which of
    the two shapes to insert.
    """

    kind: MoveKind
    location: int
    direction: str = "apply"
    position: int | None = None
    variant: int = 0


def _ev(kind: EventKind, p: int) -> MorseEvent:
    return MorseEvent(kind, p)


_CUP, _CAP = EventKind.CUP, EventKind.CAP
_X, _Y, _V = EventKind.CROSS_POS, EventKind.CROSS_NEG, EventKind.VIRTUAL
_CLASSICAL = (_X, _Y)


def _width_before(d: MorseDiagram, t: int) -> int:
    w = d.initial_width
    for ev in d.events[:t]:
        i, o = ev.kind.arity
        w += o - i
    return w


def _rewrite(d: MorseDiagram, t: int, n_old: int, new: Sequence[MorseEvent]) -> MorseDiagram:
    events = d.events[:t] + tuple(new) + d.events[t + n_old :]
    out = MorseDiagram(events, d.initial_width)
    validate(out)
    return out


def _pair(d: MorseDiagram, t: int) -> tuple[MorseEvent, MorseEvent]:
    if t < 0 or t + 1 >= len(d.events):
        raise MoveError(f"no event pair at location {t}")
    return d.events[t], d.events[t + 1]


def _triple(d: MorseDiagram, t: int) -> tuple[MorseEvent, MorseEvent, MorseEvent]:
    if t < 0 or t + 2 >= len(d.events):
        raise MoveError(f"no event triple at location {t}")
    return d.events[t], d.events[t + 1], d.events[t + 2]


def _exchange(e1: MorseEvent, e2: MorseEvent) -> tuple[MorseEvent, MorseEvent] | None:
    """Commute two consecutive events acting on disjoint strands, or None."""
    in1, out1 = e1.kind.arity
    in2, out2 = e2.kind.arity
    p1, p2 = e1.position, e2.position
    if p2 + in2 <= p1:
        return _ev(e2.kind, p2), _ev(e1.kind, p1 + out2 - in2)
    if p2 >= p1 + out1:
        return _ev(e2.kind, p2 - out1 + in1), _ev(e1.kind, p1)
    return None


def _valid_r3(c1: EventKind, c2: EventKind, c3: EventKind) -> bool:
    if c1 not in _CLASSICAL or c2 not in _CLASSICAL or c3 not in _CLASSICAL:
        return False
    # s1^a s2^b s1^c = s2^c s1^b s2^a fails only for a == c != b
    return not (c1 == c3 and c2 != c1)


def apply_move(d: MorseDiagram, m: MorseMove) -> MorseDiagram:
    """Rewrite ``d`` by one Morse move; raises :class:`MoveError` on mismatch."""
    t = m.location
    kind = m.kind
    inverse = m.direction == "inverse"
    if m.direction not in ("apply", "inverse"):
        raise MoveError(f"unknown direction {m.direction!r}")

    if kind is MoveKind.MIN_MAX_CANCEL:
        if not inverse:
            e1, e2 = _pair(d, t)
            p = e1.position
            if e1.kind is _CUP and e2.kind is _CAP and e2.position in (p - 1, p + 1):
                return _rewrite(d, t, 2, ())
            raise MoveError("MinMaxCancel needs a zigzag [U(p+1), A(p)] or [U(p), A(p+1)]")
        p = _insert_position(d, m, need=1)
        new = (_ev(_CUP, p + 1), _ev(_CAP, p)) if m.variant == 0 else (_ev(_CUP, p), _ev(_CAP, p + 1))
        return _rewrite(d, t, 0, new)

    if kind in (MoveKind.REIDEMEISTER_II, MoveKind.VIRTUAL_II):
        if not inverse:
            e1, e2 = _pair(d, t)
            if e1.position != e2.position:
                raise MoveError("Reidemeister II needs two crossings at one position")
            ok = (
                {e1.kind, e2.kind} == {_X, _Y}
                if kind is MoveKind.REIDEMEISTER_II
                else e1.kind is _V and e2.kind is _V
            )
            if not ok:
                raise MoveError(f"{kind.value} pattern mismatch at {t}")
            return _rewrite(d, t, 2, ())
        p = _insert_position(d, m, need=2)
        if kind is MoveKind.VIRTUAL_II:
            new = (_ev(_V, p), _ev(_V, p))
        else:
            new = (_ev(_X, p), _ev(_Y, p)) if m.variant == 0 else (_ev(_Y, p), _ev(_X, p))
        return _rewrite(d, t, 0, new)

    if kind in (MoveKind.REIDEMEISTER_III, MoveKind.VIRTUAL_III, MoveKind.MIXED_III):
        e1, e2, e3 = _triple(d, t)
        p = e1.position
        left = e2.position == p + 1 and e3.position == p
        right = e2.position == p - 1 and e3.position == p
        if (inverse and not right) or (not inverse and not left):
            raise MoveError(f"{kind.value} position pattern mismatch at {t}")
        q = e2.position
        c1, c2, c3 = e1.kind, e2.kind, e3.kind
        if kind is MoveKind.REIDEMEISTER_III:
            ok = _valid_r3(c1, c2, c3)
        elif kind is MoveKind.VIRTUAL_III:
            ok = c1 is _V and c2 is _V and c3 is _V
        else:
            ok = c1 is _V and c3 is _V and c2 in _CLASSICAL
        if not ok:
            raise MoveError(f"{kind.value} crossing pattern mismatch at {t}")
        # [c1(p), c2(q), c3(p)] -> [c3(q), c2(p), c1(q)]
        return _rewrite(d, t, 3, (_ev(c3, q), _ev(c2, p), _ev(c1, q)))

    if kind is MoveKind.SLIDE_OVER_MIN:
        e1, e2 = _pair(d, t)
        if e1.kind is not _CUP or not e2.kind.is_crossing:
            raise MoveError("SlideOverMin needs a cup followed by a crossing")
        p = e2.position if not inverse else e1.position
        if not inverse and e1.position == p + 1:
            # [U(p+1), C(p)] -> [U(p), C'(p+1)]
            return _rewrite(d, t, 2, (_ev(_CUP, p), _ev(_FLIP[e2.kind], p + 1)))
        if inverse and e2.position == p + 1:
            return _rewrite(d, t, 2, (_ev(_CUP, p + 1), _ev(_FLIP[e2.kind], p)))
        raise MoveError("SlideOverMin position pattern mismatch")

    if kind is MoveKind.SLIDE_OVER_MAX:
        e1, e2 = _pair(d, t)
        if not e1.kind.is_crossing or e2.kind is not _CAP:
            raise MoveError("SlideOverMax needs a crossing followed by a cap")
        if not inverse and e2.position == e1.position + 1:
            # [C(p), A(p+1)] -> [C'(p+1), A(p)]
            p = e1.position
            return _rewrite(d, t, 2, (_ev(_FLIP[e1.kind], p + 1), _ev(_CAP, p)))
        if inverse and e2.position == e1.position - 1:
            p = e2.position
            return _rewrite(d, t, 2, (_ev(_FLIP[e1.kind], p), _ev(_CAP, p + 1)))
        raise MoveError("SlideOverMax position pattern mismatch")

    if kind is MoveKind.DISTANT_EXCHANGE:
        e1, e2 = _pair(d, t)
        swapped = _exchange(e1, e2)
        if swapped is None:
            raise MoveError("DistantExchange needs events on disjoint strands")
        return _rewrite(d, t, 2, swapped)

    raise MoveError(f"unsupported move {kind}")


def _insert_position(d: MorseDiagram, m: MorseMove, need: int) -> int:
    if m.position is None:
        raise MoveError("inverse insertion moves need a position")
    if not 0 <= m.location <= len(d.events):
        raise MoveError(f"insertion slot {m.location} out of range")
    w = _width_before(d, m.location)
    if m.position < 0 or m.position + need > w:
        raise MoveError(f"no strand(s) at position {m.position} (width {w})")
    return m.position


def applicable_moves(
    d: MorseDiagram,
    max_width: int | None = None,
    virtual: bool | None = None,
) -> dict[MoveKind, list[MorseMove]]:
    """Every move instance that applies to ``d``, grouped by kind.

    Insertions that would push the diagram past ``max_width`` are left out.
    Virtual-crossing moves are offered when ``virtual`` is true (default: when
    the diagram already has virtual crossings). Reidemeister I never appears.
    """
    if virtual is None:
        virtual = d.has_virtual()
    ev = d.events
    n = len(ev)
    widths = [d.initial_width, *validate(d)]
    cap = max_width if max_width is not None else max(widths) + 2
    out: dict[MoveKind, list[MorseMove]] = {k: [] for k in MoveKind}

    def try_add(mv: MorseMove) -> None:
        try:
            res = apply_move(d, mv)
        except (MoveError, DiagramError):
            return
        if res.max_width <= cap or res.max_width <= max(widths):
            out[mv.kind].append(mv)

    for t in range(n - 1):
        e1, e2 = ev[t], ev[t + 1]
        if e1.kind is _CUP and e2.kind is _CAP:
            try_add(MorseMove(MoveKind.MIN_MAX_CANCEL, t))
        if e1.kind in _CLASSICAL and e2.kind in _CLASSICAL:
            try_add(MorseMove(MoveKind.REIDEMEISTER_II, t))
        if virtual and e1.kind is _V and e2.kind is _V:
            try_add(MorseMove(MoveKind.VIRTUAL_II, t))
        if e1.kind is _CUP and e2.kind.is_crossing:
            try_add(MorseMove(MoveKind.SLIDE_OVER_MIN, t))
            try_add(MorseMove(MoveKind.SLIDE_OVER_MIN, t, "inverse"))
        if e1.kind.is_crossing and e2.kind is _CAP:
            try_add(MorseMove(MoveKind.SLIDE_OVER_MAX, t))
            try_add(MorseMove(MoveKind.SLIDE_OVER_MAX, t, "inverse"))
        if _exchange(e1, e2) is not None:
            try_add(MorseMove(MoveKind.DISTANT_EXCHANGE, t))
    for t in range(n - 2):
        for kind in (MoveKind.REIDEMEISTER_III,) + ((MoveKind.VIRTUAL_III, MoveKind.MIXED_III) if virtual else ()):
            try_add(MorseMove(kind, t))
            try_add(MorseMove(kind, t, "inverse"))
    # insertions are valid whenever the strands exist; no trial rewrite needed
    for t in range(n + 1):
        w = widths[t]
        for p in range(w):
            if w + 2 <= cap:
                for variant in (0, 1):
                    out[MoveKind.MIN_MAX_CANCEL].append(MorseMove(MoveKind.MIN_MAX_CANCEL, t, "inverse", p, variant))
            if p + 1 < w:
                for variant in (0, 1):
                    out[MoveKind.REIDEMEISTER_II].append(MorseMove(MoveKind.REIDEMEISTER_II, t, "inverse", p, variant))
                if virtual:
                    out[MoveKind.VIRTUAL_II].append(MorseMove(MoveKind.VIRTUAL_II, t, "inverse", p))
    return {k: v for k, v in out.items() if v}


_INSERTING = {MoveKind.MIN_MAX_CANCEL, MoveKind.REIDEMEISTER_II, MoveKind.VIRTUAL_II}


def random_equivalent(
    d: MorseDiagram,
    steps: int,
    seed: int,
    max_width: int | None = 10,
    max_events: int | None = None,
    virtual: bool | None = None,
) -> MorseDiagram:
    """Apply ``steps`` random regular-isotopy moves, deterministically per seed.

    At each step a move kind is drawn uniformly among the kinds with an
    applicable instance (insertions and removals counted as separate kinds),
    then an instance of that kind. ``max_events`` caps growth by suppressing
    insertions once the diagram is that long (default: twice the start).
    """
    rng = random.Random(seed)
    if max_events is None:
        max_events = max(2 * len(d.events), 8)
    if max_width is not None:
        max_width = max(max_width, d.max_width if d.events else d.initial_width)
    for _ in range(steps):
        moves = applicable_moves(d, max_width=max_width, virtual=virtual)
        buckets: dict[tuple[MoveKind, bool], list[MorseMove]] = {}
        for kind, lst in moves.items():
            for mv in lst:
                grows = kind in _INSERTING and mv.direction == "inverse"
                if grows and len(d.events) + 2 > max_events:
                    continue
                buckets.setdefault((kind, grows), []).append(mv)
        if not buckets:
            break
        keys = sorted(buckets, key=lambda k: (k[0].value, k[1]))
        choice = buckets[keys[rng.randrange(len(keys))]]
        d = apply_move(d, choice[rng.randrange(len(choice))])
    return d
