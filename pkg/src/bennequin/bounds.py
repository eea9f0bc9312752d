"""
Bounds on s#, s, g4, the maximal self-linking number and 2*s~.

Nothing here computes s# or s. Every number this module produces is either a
closed-form torus knot value or a bound obtained by chaining the inequalities
in ``RULES`` from a classical invariant of a transverse or Legendrian
representative. Each bound carries the chain that produced it.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Iterator

from . import braid as br
from . import front as fr

RULES = {
    "bennequin_formula": "sl(closure of b) = x+ - x- - n",
    "transverse_pushoff": "sl(T+-) = tb -+ rot, so the better push-off has sl = tb + |rot|",
    "maximal_self_linking": "max sl(K) >= sl(T) for every transverse representative T of K",
    "torus_knot_values": "s#(T(p,q)) = 2 g4 - 1 = s - 1 = max sl = (p-1)(q-1) - 1",
    "positive_resolution": "switching the x- negative crossings gives a positive braid b+ on the same strands",
    "positive_braid_cobordism": "closure of a positive knot braid cobords to T(n,l), l >= x+, gcd(n,l) = 1, with chi = x+ + l - l n",
    "cobordism_hypothesis": "every component of the cobordism has non-empty boundary in the source link (asserted by caller)",
    "cobordism_inequality": "s#(L2) - s#(L1) <= -chi + |L1| - |L2|",
    "crossing_change": "|s#(L+) - s#(L-)| <= 2",
    "sharp_bennequin": "sl(T) <= s#(T)",
    "plamenevskaya_shumakovitch": "sl(T) <= s(T) - 1",
    "genus_bound": "s(K) <= 2 g4(K) and s#(K) <= 2 g4(K)",
    "slice_bennequin": "sl(T) <= 2 g4(T) - 1",
    "s_tilde_bennequin": "sl(T) <= 2 s~(T) - 1",
    "s_tilde_comparison": "|s#(K) - 2 s~(K)| <= 1",
}

TARGETS = ("s_sharp", "s", "g4", "sl_max", "s_tilde")
LOWER = "lower"
UPPER = "upper"


@dataclasses.dataclass(frozen=True)
class DerivationStep:
    rule: str
    detail: str = ""

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown inequality {self.rule!r}")

    def to_dict(self) -> dict:
        return {"rule": self.rule, "statement": RULES[self.rule], "detail": self.detail}


@dataclasses.dataclass(frozen=True)
class Bound:
    """One bound on one invariant. ``s_tilde`` values may be half-integers."""

    target: str
    direction: str
    value: int | Fraction
    derivation: tuple[DerivationStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "derivation", tuple(self.derivation))
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if self.direction not in (LOWER, UPPER):
            raise ValueError(f"direction must be {LOWER!r} or {UPPER!r}")
        if not self.derivation:
            raise ValueError("a bound needs a derivation")
        value = Fraction(self.value)
        if value.denominator == 1:
            value = int(value)
        elif self.target != "s_tilde" or value.denominator != 2:
            raise ValueError(f"{self.target} bound must be integral, got {value}")
        object.__setattr__(self, "value", value)

    @property
    def value_times_two(self) -> int:
        return int(2 * self.value)

    def to_dict(self) -> dict:
        d = {
            "target": self.target,
            "direction": self.direction,
            "value": self.value if isinstance(self.value, int) else float(self.value),
        }
        if self.target == "s_tilde":
            d["value_times_two"] = self.value_times_two
        d["derivation"] = [step.to_dict() for step in self.derivation]
        return d


@dataclasses.dataclass(frozen=True)
class BoundReport:
    subject: dict
    bounds: tuple[Bound, ...]

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(self.bounds))
        for target in TARGETS:
            lo, hi = self.lower(target), self.upper(target)
            if lo is not None and hi is not None and lo > hi:
                raise ValueError(f"inconsistent bounds on {target}: lower {lo} > upper {hi}")

    def lower(self, target: str):
        """Strongest lower bound on ``target``, or None."""
        values = [b.value for b in self.bounds if b.target == target and b.direction == LOWER]
        return max(values) if values else None

    def upper(self, target: str):
        values = [b.value for b in self.bounds if b.target == target and b.direction == UPPER]
        return min(values) if values else None

    def to_dict(self) -> dict:
        return {"subject": dict(self.subject), "bounds": [b.to_dict() for b in self.bounds]}


@dataclasses.dataclass(frozen=True)
class TorusKnotInvariants:
    p: int
    q: int
    s_sharp: int
    s: int
    g4: int
    sl_max: int

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class CobordismData:
    """Euler characteristic of a link cobordism and the component counts at its ends."""

    chi: int
    components_from: int
    components_to: int

    def __post_init__(self):
        if self.components_from < 1 or self.components_to < 1:
            raise ValueError("links at both ends need at least one component")


@dataclasses.dataclass(frozen=True)
class CobordismCheck:
    l: int
    chi: int
    torus_s_sharp: int
    recovered_bound: int


@dataclasses.dataclass(frozen=True)
class ResolutionDecomposition:
    positive_bound: int
    switches: int
    final_bound: int


def torus_knot_invariants(p: int, q: int) -> TorusKnotInvariants:
    if p < 1 or q < 1:
        raise ValueError(f"torus knot needs p, q >= 1, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link: gcd({p},{q}) = {math.gcd(p, q)}")
    m = (p - 1) * (q - 1)
    return TorusKnotInvariants(p=p, q=q, s_sharp=m - 1, s=m, g4=m // 2, sl_max=m - 1)


def admissible_torus_widths(n: int, x_plus: int) -> Iterator[int]:
    """Yield every l >= max(x_plus, 1) with gcd(n, l) == 1, in increasing order."""
    l = max(x_plus, 1)
    while True:
        if math.gcd(n, l) == 1:
            yield l
        l += 1


def positive_braid_cobordism_check(b: br.BraidWord, l: int | None = None) -> CobordismCheck:
    """Replay the positive-braid-to-torus-knot cobordism bound.

    The closure of a positive knot braid with x+ crossings on n strands cobords
    to T(n, l) with chi = x+ + l - l*n, and the cobordism inequality then gives
    s# >= s#(T(n, l)) + chi, which simplifies to x+ - n for every admissible l.
    ``l`` defaults to the smallest admissible width.
    """
    x_plus, x_minus = br.crossing_counts(b)
    if x_minus:
        raise ValueError(f"braid [{br.render_braid(b)}] has {x_minus} negative crossings")
    br.require_knot(b)
    n = b.strands
    if l is None:
        l = next(admissible_torus_widths(n, x_plus))
    elif l < max(x_plus, 1) or math.gcd(n, l) != 1:
        raise ValueError(f"l = {l} is not admissible for n = {n}, x+ = {x_plus}")
    chi = x_plus + l - l * n
    torus = torus_knot_invariants(n, l).s_sharp
    recovered = cobordism_pullback(torus, CobordismData(chi, 1, 1)).value
    return CobordismCheck(l=l, chi=chi, torus_s_sharp=torus, recovered_bound=recovered)


def resolution_bound_decomposition(b: br.BraidWord) -> ResolutionDecomposition:
    """Bound s# for any knot braid through its positive resolution and crossing changes."""
    br.require_knot(b)
    positive, switches = br.positive_resolution(b)
    positive_bound = positive_braid_cobordism_check(positive).recovered_bound
    lo, _ = crossing_change_interval(positive_bound, switches)
    return ResolutionDecomposition(positive_bound=positive_bound, switches=switches, final_bound=lo)


def cobordism_propagate(known_s_sharp_L1: int, cob: CobordismData) -> Bound:
    """Upper bound on s# of the target link of ``cob``."""
    value = known_s_sharp_L1 - cob.chi + cob.components_from - cob.components_to
    return Bound(
        "s_sharp",
        UPPER,
        value,
        (
            DerivationStep("cobordism_hypothesis"),
            DerivationStep(
                "cobordism_inequality",
                f"s#(L2) <= {known_s_sharp_L1} - ({cob.chi}) + {cob.components_from} - {cob.components_to} = {value}",
            ),
        ),
    )


def cobordism_pullback(known_s_sharp_L2: int, cob: CobordismData) -> Bound:
    """Lower bound on s# of the source link of ``cob``; the same inequality read the other way."""
    value = known_s_sharp_L2 + cob.chi - cob.components_from + cob.components_to
    return Bound(
        "s_sharp",
        LOWER,
        value,
        (
            DerivationStep("cobordism_hypothesis"),
            DerivationStep(
                "cobordism_inequality",
                f"s#(L1) >= {known_s_sharp_L2} + ({cob.chi}) - {cob.components_from} + {cob.components_to} = {value}",
            ),
        ),
    )


def crossing_change_interval(known_s_sharp: int, switches: int) -> tuple[int, int]:
    if switches < 0:
        raise ValueError("switch count must be nonnegative")
    return known_s_sharp - 2 * switches, known_s_sharp + 2 * switches


def s_tilde_relations(*, s_sharp: int | None = None, s_tilde_times_two: int | None = None) -> tuple[int, int]:
    """Given s#, return the interval for 2*s~; given 2*s~, return the interval for s#."""
    if (s_sharp is None) == (s_tilde_times_two is None):
        raise ValueError("pass exactly one of s_sharp and s_tilde_times_two")
    known = s_sharp if s_sharp is not None else s_tilde_times_two
    return known - 1, known + 1


def _ceil_half(k: int) -> int:
    return -((-k) // 2)


def _bounds_from_sl(sl: int, sl_steps: tuple, sharp_steps: tuple) -> list[Bound]:
    """Everything that follows from one transverse representative with self-linking ``sl``.

    ``sharp_steps`` is the derivation of s# >= sl; the remaining bounds reuse
    the transverse inequalities directly.
    """
    sharp = sl_steps + sharp_steps
    return [
        Bound("s_sharp", LOWER, sl, sharp),
        Bound("sl_max", LOWER, sl, sl_steps + (DerivationStep("maximal_self_linking", f"max sl >= {sl}"),)),
        Bound(
            "s",
            LOWER,
            sl + 1,
            sl_steps + (DerivationStep("plamenevskaya_shumakovitch", f"s >= {sl} + 1 = {sl + 1}"),),
        ),
        Bound(
            "g4",
            LOWER,
            _ceil_half(sl),
            sharp + (DerivationStep("genus_bound", f"2 g4 >= s# >= {sl}, so g4 >= {_ceil_half(sl)}"),),
        ),
        Bound(
            "g4",
            LOWER,
            _ceil_half(sl + 1),
            sl_steps
            + (DerivationStep("slice_bennequin", f"2 g4 >= {sl} + 1, so g4 >= {_ceil_half(sl + 1)}"),),
        ),
        Bound(
            "s_tilde",
            LOWER,
            Fraction(sl + 1, 2),
            sl_steps + (DerivationStep("s_tilde_bennequin", f"2 s~ >= {sl} + 1 = {sl + 1}"),),
        ),
    ]


def braid_subject(b: br.BraidWord) -> dict:
    return {"kind": "braid", "strands": b.strands, "word": br.render_braid(b)}


def sharp_bound_from_braid(b: br.BraidWord) -> BoundReport:
    br.require_knot(b)
    x_plus, x_minus = br.crossing_counts(b)
    n = b.strands
    sl = br.self_linking(b)
    sl_steps = (DerivationStep("bennequin_formula", f"sl = {x_plus} - {x_minus} - {n} = {sl}"),)

    positive, switches = br.positive_resolution(b)
    check = positive_braid_cobordism_check(positive)
    decomposition = resolution_bound_decomposition(b)
    sharp_steps = (
        DerivationStep("positive_resolution", f"b+ has {x_plus + x_minus} positive crossings, {switches} switched"),
        DerivationStep("positive_braid_cobordism", f"l = {check.l}, chi = {check.chi}"),
        DerivationStep("torus_knot_values", f"s#(T({n},{check.l})) = {check.torus_s_sharp}"),
        DerivationStep(
            "cobordism_inequality",
            f"s#(b+) >= {check.torus_s_sharp} + ({check.chi}) = {decomposition.positive_bound}",
        ),
        DerivationStep(
            "crossing_change",
            f"s# >= {decomposition.positive_bound} - 2*{switches} = {decomposition.final_bound}",
        ),
        DerivationStep("sharp_bennequin", f"s# >= sl = {sl}"),
    )
    return BoundReport(braid_subject(b), tuple(_bounds_from_sl(sl, sl_steps, sharp_steps)))


def front_subject(of: fr.OrientedFront) -> dict:
    canonical = fr.orient(of.front)
    return {
        "kind": "front",
        "word": fr.render_front(of.front),
        "orientation": "canonical" if canonical == of else "reversed",
    }


def sharp_bound_from_front(of: fr.OrientedFront) -> BoundReport:
    fr.require_knot_front(of.front)
    tb = fr.thurston_bennequin(of)
    rot = fr.rotation_number(of)
    sl = tb + abs(rot)
    sl_steps = (
        DerivationStep("transverse_pushoff", f"tb = {tb}, rot = {rot}, sl = {tb} + {abs(rot)} = {sl}"),
    )
    sharp_steps = (DerivationStep("sharp_bennequin", f"s# >= sl = {sl}"),)
    return BoundReport(front_subject(of), tuple(_bounds_from_sl(sl, sl_steps, sharp_steps)))
