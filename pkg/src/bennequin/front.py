"""
Legendrian front diagrams as sequences of slice events.

A front is read left to right. Between events the front meets a vertical line in
some number of strands, numbered 1..m from top to bottom. Three events change
that picture:

    L<i>   a left cusp opens two new strands at positions i and i+1
    X<i>   the strands at positions i and i+1 cross
    R<i>   the strands at positions i and i+1 close up in a right cusp

A valid front starts and ends with zero strands. Every strand is born at one
left cusp and dies at one right cusp, so joining strands through their cusps
gives a disjoint union of cycles, one per link component.

In a front the over-strand at a crossing is the one with the smaller slope, so
a crossing carries no extra data. With an orientation fixed, a crossing is
positive exactly when both strands travel in the same x-direction.
"""

from __future__ import annotations

import dataclasses
import functools
import re

from .braid import NotAKnotError, ParseError, _tokens

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

_TOKEN = re.compile(r"([LRX])([1-9][0-9]*)\Z")


@dataclasses.dataclass(frozen=True)
class Event:
    kind: str
    position: int

    def __str__(self):
        return f"{self.kind}{self.position}"


@dataclasses.dataclass(frozen=True)
class _Replay:
    # per event: (upper strand id, lower strand id) at the two positions involved
    pairs: tuple[tuple[int, int], ...]
    left_partner: tuple[int, ...]
    right_partner: tuple[int, ...]


def _replay(events) -> _Replay:
    """Simulate the events, naming strands 2j (upper) and 2j+1 (lower) for the j-th left cusp."""
    order: list[int] = []
    pairs = []
    left_partner: dict[int, int] = {}
    right_partner: dict[int, int] = {}
    next_id = 0
    for index, ev in enumerate(events):
        i = ev.position
        if ev.kind == LEFT_CUSP:
            if not 1 <= i <= len(order) + 1:
                raise ParseError(f"left cusp at position {i} with {len(order)} strands present", index, None)
            up, low = next_id, next_id + 1
            next_id += 2
            order[i - 1:i - 1] = [up, low]
            left_partner[up], left_partner[low] = low, up
        else:
            if not 1 <= i <= len(order) - 1:
                what = "right cusp" if ev.kind == RIGHT_CUSP else "crossing"
                raise ParseError(f"{what} at position {i} with {len(order)} strands present", index, None)
            up, low = order[i - 1], order[i]
            if ev.kind == RIGHT_CUSP:
                del order[i - 1:i + 1]
                right_partner[up], right_partner[low] = low, up
            else:
                order[i - 1], order[i] = low, up
        pairs.append((up, low))
    if order:
        lefts = next_id // 2
        raise ParseError(
            f"front ends with {len(order)} strands instead of 0 "
            f"({lefts} left cusps but {lefts - len(order) // 2} right cusps)"
        )
    return _Replay(
        tuple(pairs),
        tuple(left_partner[s] for s in range(next_id)),
        tuple(right_partner[s] for s in range(next_id)),
    )


@dataclasses.dataclass(frozen=True)
class FrontDiagram:
    events: tuple[Event, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        for ev in self.events:
            if ev.kind not in (LEFT_CUSP, RIGHT_CUSP, CROSSING) or ev.position < 1:
                raise ValueError(f"bad front event {ev!r}")
        self._sim

    @functools.cached_property
    def _sim(self) -> _Replay:
        return _replay(self.events)

    @property
    def strand_count(self) -> int:
        return len(self._sim.left_partner)

    def components(self) -> list[tuple[int, ...]]:
        """Strand ids grouped into cycles, each starting at its smallest id."""
        rp = self._sim
        seen = set()
        out = []
        for start in range(self.strand_count):
            if start in seen:
                continue
            cycle = []
            s, use_right = start, True
            while s not in seen:
                seen.add(s)
                cycle.append(s)
                s = rp.right_partner[s] if use_right else rp.left_partner[s]
                use_right = not use_right
            out.append(tuple(cycle))
        return out

    def component_count(self) -> int:
        return len(self.components())

    def is_knot(self) -> bool:
        return self.component_count() == 1

    def count(self, kind: str) -> int:
        return sum(1 for ev in self.events if ev.kind == kind)

    def __str__(self):
        return render_front(self)


@dataclasses.dataclass(frozen=True)
class OrientedFront:
    """A knot front with an x-direction (+1 rightward, -1 leftward) for every strand."""

    front: FrontDiagram
    directions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "directions", tuple(self.directions))
        if len(self.directions) != self.front.strand_count:
            raise ValueError("one direction per strand is required")
        rp = self.front._sim
        for s, d in enumerate(self.directions):
            if d not in (1, -1):
                raise ValueError(f"direction must be +1 or -1, got {d}")
            # directions flip at every cusp
            if self.directions[rp.left_partner[s]] != -d or self.directions[rp.right_partner[s]] != -d:
                raise ValueError("directions must reverse at each cusp")


def parse_front(text: str) -> FrontDiagram:
    events = []
    for index, offset, tok in _tokens(text):
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"{tok!r} is not of the form L<i>, R<i> or X<i>", index, offset)
        events.append(Event(m.group(1), int(m.group(2))))
    try:
        return FrontDiagram(tuple(events))
    except ParseError as exc:
        if exc.token_index is None:
            raise
        offset = [off for _, off, _ in _tokens(text)][exc.token_index]
        raise ParseError(exc.detail, exc.token_index, offset) from None


def render_front(front: FrontDiagram) -> str:
    return " ".join(str(ev) for ev in front.events)


def require_knot_front(front: FrontDiagram) -> None:
    c = front.component_count()
    if c != 1:
        raise NotAKnotError(f"front [{render_front(front)}] has {c} components, a knot front needs 1")


def orient(front: FrontDiagram) -> OrientedFront:
    """Orient a knot front: the upper strand of the first left cusp travels rightward."""
    require_knot_front(front)
    rp = front._sim
    directions = [0] * front.strand_count
    s, d = 0, 1
    while directions[s] == 0:
        directions[s] = d
        s = rp.right_partner[s] if d == 1 else rp.left_partner[s]
        d = -d
    return OrientedFront(front, tuple(directions))


def reverse_orientation(of: OrientedFront) -> OrientedFront:
    return OrientedFront(of.front, tuple(-d for d in of.directions))


def crossing_signs(of: OrientedFront) -> list[int]:
    rp = of.front._sim
    return [
        of.directions[up] * of.directions[low]
        for ev, (up, low) in zip(of.front.events, rp.pairs)
        if ev.kind == CROSSING
    ]


def writhe(of: OrientedFront) -> int:
    return sum(crossing_signs(of))


def cusp_counts(of: OrientedFront) -> tuple[int, int]:
    """Return ``(down, up)``: cusps traversed from the upper to the lower strand, and the rest.

    At a right cusp the traversal arrives on the rightward strand, at a left
    cusp on the leftward one.
    """
    rp = of.front._sim
    down = up = 0
    for ev, (upper, _) in zip(of.front.events, rp.pairs):
        if ev.kind == CROSSING:
            continue
        arriving = 1 if ev.kind == RIGHT_CUSP else -1
        if of.directions[upper] == arriving:
            down += 1
        else:
            up += 1
    return down, up


def thurston_bennequin(of: OrientedFront) -> int:
    return writhe(of) - of.front.count(RIGHT_CUSP)


def rotation_number(of: OrientedFront) -> int:
    down, up = cusp_counts(of)
    return (down - up) // 2


def transverse_pushoff_sl(of: OrientedFront, sign: int) -> int:
    """Self-linking number of the positive (+1) or negative (-1) transverse push-off."""
    if sign not in (1, -1):
        raise ValueError(f"push-off sign must be +1 or -1, got {sign}")
    return thurston_bennequin(of) - sign * rotation_number(of)


def positive_braid_front(letters, strands: int) -> FrontDiagram:
    """Front of the Legendrian closure of a positive braid.

    The n return strands run along the top and the braid sits in the lower
    half, so letter k becomes a crossing at position n + k.
    """
    if any(k < 1 or k >= strands for k in letters):
        raise ValueError("only positive braid letters 1..strands-1 have a Legendrian closure front here")
    events = [Event(LEFT_CUSP, i) for i in range(1, strands + 1)]
    events += [Event(CROSSING, strands + k) for k in letters]
    events += [Event(RIGHT_CUSP, i) for i in range(strands, 0, -1)]
    return FrontDiagram(tuple(events))


# Small named fronts used by tests and docs.
SAUCER = "L1 R1"
FISH = "L1 X1 R1"
TREFOIL = "L1 L1 X2 X2 X2 R1 R1"
