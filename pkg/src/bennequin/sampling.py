"""
Seeded random braids and fronts for the verification suites.

The generator is SplitMix64 (Steele, Lea and Flood 2014), chosen because it is
a few lines in any language, so a seed pins the exact sample sequence
independently of the host's ``random`` module. Bounded integers are drawn by
rejection: a 64-bit output ``z`` is accepted when ``z < 2**64 - (2**64 % m)``
and mapped to ``z % m``.

Sampling procedures (all draws in the order listed):

random_braid(positive, knot):
    n = between(1, max_strands); length = between(0, max_length) (0 if n == 1);
    per letter: k = between(1, n-1), then, unless positive, a sign bit below(2)
    (1 means negative). With ``knot`` the whole draw repeats until the closure
    is a knot.

random_front:
    length = between(2, max_events); per event choose uniformly among the
    events that are valid for the current strand count m and still leave
    room to close every strand in the remaining r events: L1..L(m+1) when
    m + 2 <= 2*r, then R1..R(m-1), then X1..X(m-1) when m <= 2*r. If no
    event fits (zero strands with one event left) the draw restarts. A
    finished word ends with zero strands; repeat until it closes to a knot.
"""

from __future__ import annotations

from .braid import BraidWord, is_knot_closure
from .front import CROSSING, LEFT_CUSP, RIGHT_CUSP, Event, FrontDiagram

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in [0, m)."""
        if m < 1:
            raise ValueError(f"bound must be positive, got {m}")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % m

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


def random_braid(
    rng: SplitMix64,
    max_strands: int = 8,
    max_length: int = 40,
    positive: bool = False,
    knot: bool = False,
    max_attempts: int = 100_000,
) -> BraidWord:
    for _ in range(max_attempts):
        n = rng.between(1, max_strands)
        length = rng.between(0, max_length) if n > 1 else 0
        letters = []
        for _ in range(length):
            k = rng.between(1, n - 1)
            if not positive and rng.below(2):
                k = -k
            letters.append(k)
        b = BraidWord(n, tuple(letters))
        if not knot or is_knot_closure(b):
            return b
    raise RuntimeError(f"no knot braid found in {max_attempts} attempts")


def random_front(rng: SplitMix64, max_events: int = 20, max_attempts: int = 1_000_000) -> FrontDiagram:
    for _ in range(max_attempts):
        length = rng.between(2, max_events)
        events = []
        m = 0
        for step in range(length):
            room = 2 * (length - step - 1)
            lefts = m + 1 if m + 2 <= room else 0
            rights = max(m - 1, 0)
            crossings = rights if m <= room else 0
            if lefts + rights + crossings == 0:
                break
            c = rng.below(lefts + rights + crossings)
            if c < lefts:
                events.append(Event(LEFT_CUSP, c + 1))
                m += 2
            elif c < lefts + rights:
                events.append(Event(RIGHT_CUSP, c - lefts + 1))
                m -= 2
            else:
                events.append(Event(CROSSING, c - lefts - rights + 1))
        if len(events) < length:
            continue
        front = FrontDiagram(tuple(events))
        if front.is_knot():
            return front
    raise RuntimeError(f"no knot front found in {max_attempts} attempts")
