"""Batch checks of the identities behind the bounds, shared by the CLI and the tests."""

from __future__ import annotations

import dataclasses
import math

from . import braid as br
from . import front as fr
from .bounds import (
    admissible_torus_widths,
    positive_braid_cobordism_check,
    resolution_bound_decomposition,
    torus_knot_invariants,
)
from .sampling import SplitMix64, random_braid, random_front

DEFAULT_SEED = 0


@dataclasses.dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)
    samples: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "samples": self.samples,
            "checks": self.checks,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
        }


def coprime_pairs(max_q: int):
    for q in range(3, max_q + 1):
        for p in range(2, q):
            if math.gcd(p, q) == 1:
                yield p, q


def torus_equality(max_q: int = 13) -> SuiteResult:
    res = SuiteResult("torus-equality")
    for p, q in coprime_pairs(max_q):
        res.samples += 1
        sl = br.self_linking(br.torus_braid(p, q))
        closed = (p - 1) * (q - 1) - 1
        t = torus_knot_invariants(p, q)
        res.check(sl == closed == t.s_sharp, f"T({p},{q}): sl={sl}, formula={closed}, s#={t.s_sharp}")
        res.check(t.s_sharp == 2 * t.g4 - 1 == t.s - 1 == t.sl_max, f"T({p},{q}): torus values disagree {t}")
    return res


def cobordism_chain(samples: int = 500, seed: int = DEFAULT_SEED, widths: int = 3) -> SuiteResult:
    """Recovered bound equals x+ - n for the first ``widths`` admissible torus widths."""
    rng = SplitMix64(seed)
    res = SuiteResult("cobordism-chain")
    for _ in range(samples):
        b = random_braid(rng, positive=True, knot=True)
        res.samples += 1
        x_plus, _ = br.crossing_counts(b)
        gen = admissible_torus_widths(b.strands, x_plus)
        for _ in range(widths):
            c = positive_braid_cobordism_check(b, next(gen))
            res.check(
                c.recovered_bound == x_plus - b.strands
                and c.chi == x_plus + c.l - c.l * b.strands,
                f"[{br.render_braid(b)}] n={b.strands} l={c.l}: recovered {c.recovered_bound}",
            )
    return res


def resolution(samples: int = 500, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = SplitMix64(seed)
    res = SuiteResult("resolution")
    for _ in range(samples):
        b = random_braid(rng, knot=True)
        res.samples += 1
        d = resolution_bound_decomposition(b)
        res.check(
            d.final_bound == br.self_linking(b) and d.final_bound == d.positive_bound - 2 * d.switches,
            f"[{br.render_braid(b)}] n={b.strands}: {d}",
        )
    return res


def markov(samples: int = 1000, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = SplitMix64(seed)
    res = SuiteResult("markov")
    for _ in range(samples):
        b = random_braid(rng)
        res.samples += 1
        sl = br.self_linking(b)
        tag = f"[{br.render_braid(b)}] n={b.strands}"
        if b.strands > 1:
            k = rng.between(1, b.strands - 1)
            res.check(br.self_linking(br.conjugate(b, k)) == sl, f"{tag}: conjugation by {k}")
        res.check(br.self_linking(br.stabilize(b, 1)) == sl, f"{tag}: positive stabilization")
        res.check(br.self_linking(br.stabilize(b, -1)) == sl - 2, f"{tag}: negative stabilization")
        if b.letters:
            i = rng.below(len(b.letters))
            res.check(
                br.component_count(br.crossing_change(b, i)) == br.component_count(b),
                f"{tag}: crossing change at {i}",
            )
    return res


def pushoff(samples: int = 500, seed: int = DEFAULT_SEED) -> SuiteResult:
    rng = SplitMix64(seed)
    res = SuiteResult("pushoff")
    for _ in range(samples):
        front = random_front(rng)
        res.samples += 1
        of = fr.orient(front)
        rev = fr.reverse_orientation(of)
        tb, rot = fr.thurston_bennequin(of), fr.rotation_number(of)
        tag = f"[{fr.render_front(front)}]"
        best = max(fr.transverse_pushoff_sl(of, 1), fr.transverse_pushoff_sl(of, -1))
        res.check(best == tb + abs(rot), f"{tag}: best push-off {best} vs tb + |rot| = {tb + abs(rot)}")
        res.check(fr.thurston_bennequin(rev) == tb, f"{tag}: tb changed under reversal")
        res.check(fr.rotation_number(rev) == -rot, f"{tag}: rot did not negate under reversal")
    return res


SUITES = {
    "torus-equality": torus_equality,
    "cobordism-chain": cobordism_chain,
    "resolution": resolution,
    "markov": markov,
    "pushoff": pushoff,
}
