import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from bennequin.braid import BraidWord, NotAKnotError, crossing_counts, is_knot_closure, self_linking, torus_braid
from bennequin.bounds import (
    RULES,
    TARGETS,
    Bound,
    BoundReport,
    CobordismData,
    DerivationStep,
    admissible_torus_widths,
    cobordism_propagate,
    cobordism_pullback,
    crossing_change_interval,
    positive_braid_cobordism_check,
    resolution_bound_decomposition,
    s_tilde_relations,
    sharp_bound_from_braid,
    sharp_bound_from_front,
    torus_knot_invariants,
)
from bennequin.front import FISH, SAUCER, TREFOIL, orient, parse_front, reverse_orientation

from test_braid import braids

coprime = st.tuples(st.integers(1, 40), st.integers(1, 40)).filter(lambda pq: math.gcd(*pq) == 1)


# torus knots

@pytest.mark.parametrize(
    "p, q, s_sharp, s, g4, sl_max",
    [(2, 3, 1, 2, 1, 1), (3, 5, 7, 8, 4, 7), (1, 4, -1, 0, 0, -1), (1, 1, -1, 0, 0, -1)],
)
def test_torus_knot_values(p, q, s_sharp, s, g4, sl_max):
    t = torus_knot_invariants(p, q)
    assert (t.s_sharp, t.s, t.g4, t.sl_max) == (s_sharp, s, g4, sl_max)


@given(coprime)
def test_torus_values_consistent_and_symmetric(pq):
    p, q = pq
    t = torus_knot_invariants(p, q)
    u = torus_knot_invariants(q, p)
    assert (t.s_sharp, t.s, t.g4, t.sl_max) == (u.s_sharp, u.s, u.g4, u.sl_max)
    assert (p - 1) * (q - 1) % 2 == 0
    assert t.s_sharp == 2 * t.g4 - 1 == t.s - 1 == t.sl_max


def test_torus_rejects_links():
    with pytest.raises(ValueError, match="link"):
        torus_knot_invariants(2, 4)
    with pytest.raises(ValueError):
        torus_knot_invariants(0, 3)


# reports from braids

def test_report_torus_3_5_is_tight():
    r = sharp_bound_from_braid(torus_braid(3, 5))
    assert r.lower("s_sharp") == 7
    assert r.lower("g4") == 4
    assert r.lower("s") == 8
    assert r.lower("sl_max") == 7


def test_report_unknot():
    r = sharp_bound_from_braid(BraidWord(1, ()))
    assert (r.lower("s_sharp"), r.lower("g4"), r.lower("s")) == (-1, 0, 0)
    assert r.lower("s_tilde") == 0


def test_report_rejects_links():
    # 1 1 2 2 -1 on three strands has permutation sigma_1: two components
    b = BraidWord(3, (1, 1, 2, 2, -1))
    assert self_linking(b) == 0
    assert not is_knot_closure(b)
    with pytest.raises(NotAKnotError):
        sharp_bound_from_braid(b)


def test_report_lists_both_genus_branches():
    b = BraidWord(3, (1, 1, 2, 2, -1, 2))
    assert is_knot_closure(b)
    sl = self_linking(b)
    assert sl == 5 - 1 - 3
    r = sharp_bound_from_braid(b)
    g4 = [x for x in r.bounds if x.target == "g4"]
    assert [x.derivation[-1].rule for x in g4] == ["genus_bound", "slice_bennequin"]
    assert [x.value for x in g4] == [math.ceil(sl / 2), math.ceil((sl + 1) / 2)]


@given(braids())
def test_report_chain_for_knot_braids(b):
    if not is_knot_closure(b):
        return
    sl = self_linking(b)
    r = sharp_bound_from_braid(b)
    assert r.lower("s_sharp") == sl
    assert r.lower("sl_max") == sl
    assert r.lower("s") == sl + 1
    assert r.lower("g4") == max(-(-sl // 2), -(-(sl + 1) // 2))
    assert r.lower("s_tilde") == Fraction(sl + 1, 2)
    for bound in r.bounds:
        assert bound.derivation
        assert all(step.rule in RULES for step in bound.derivation)
    sharp = next(x for x in r.bounds if x.target == "s_sharp")
    rules = [s.rule for s in sharp.derivation]
    assert rules[0] == "bennequin_formula" and rules[-1] == "sharp_bennequin"
    assert "cobordism_inequality" in rules and "crossing_change" in rules


@given(coprime.filter(lambda pq: pq[0] <= 12 and pq[1] <= 25))
def test_bennequin_equality_on_torus_braids(pq):
    p, q = pq
    assert sharp_bound_from_braid(torus_braid(p, q)).lower("s_sharp") == torus_knot_invariants(p, q).s_sharp


# reports from fronts

def test_front_report_trefoil_equality():
    r = sharp_bound_from_front(orient(parse_front(TREFOIL)))
    assert r.lower("s_sharp") == 1 == torus_knot_invariants(2, 3).s_sharp
    assert r.subject == {"kind": "front", "word": TREFOIL, "orientation": "canonical"}


def test_front_report_saucer_and_fish():
    assert sharp_bound_from_front(orient(parse_front(SAUCER))).lower("s_sharp") == -1
    fish = orient(parse_front(FISH))
    assert sharp_bound_from_front(fish).lower("s_sharp") == -1
    rev = sharp_bound_from_front(reverse_orientation(fish))
    assert rev.lower("s_sharp") == -1
    assert rev.subject["orientation"] == "reversed"


def test_front_report_derivation_starts_with_pushoff():
    r = sharp_bound_from_front(orient(parse_front(TREFOIL)))
    for bound in r.bounds:
        assert bound.derivation[0].rule == "transverse_pushoff"


# cobordisms

def test_cobordism_propagate_examples():
    assert cobordism_propagate(1, CobordismData(0, 1, 1)).value == 1
    b = cobordism_propagate(7, CobordismData(-2, 1, 1))
    assert b.value == 9 and b.direction == "upper"
    assert [s.rule for s in b.derivation] == ["cobordism_hypothesis", "cobordism_inequality"]


def test_cobordism_counts_components():
    # a saddle merging two components into one: chi = -1
    assert cobordism_propagate(0, CobordismData(-1, 2, 1)).value == 0 + 1 + 2 - 1


@given(st.integers(-50, 50))
def test_genus_one_cobordism_both_ways_is_crossing_change(s):
    cob = CobordismData(-2, 1, 1)
    upper = cobordism_propagate(s, cob).value
    lower = cobordism_pullback(s, cob).value
    assert (lower, upper) == crossing_change_interval(s, 1)


def test_cobordism_data_needs_components():
    with pytest.raises(ValueError):
        CobordismData(0, 0, 1)


@pytest.mark.parametrize(
    "known, switches, expected",
    [(1, 0, (1, 1)), (1, 1, (-1, 3)), (7, 3, (1, 13))],
)
def test_crossing_change_interval(known, switches, expected):
    assert crossing_change_interval(known, switches) == expected


@given(st.integers(-100, 100), st.integers(0, 50))
def test_crossing_change_interval_width_and_nesting(s, k):
    lo, hi = crossing_change_interval(s, k)
    assert hi - lo == 4 * k
    lo2, hi2 = crossing_change_interval(s, k + 1)
    assert lo2 <= lo <= hi <= hi2


def test_crossing_change_interval_rejects_negative():
    with pytest.raises(ValueError):
        crossing_change_interval(0, -1)


def test_positive_braid_cobordism_trefoil():
    c = positive_braid_cobordism_check(torus_braid(2, 3))
    assert (c.l, c.chi, c.torus_s_sharp, c.recovered_bound) == (3, 0, 1, 1)


def test_positive_braid_cobordism_unknot():
    c = positive_braid_cobordism_check(BraidWord(1, ()))
    assert (c.l, c.chi, c.torus_s_sharp, c.recovered_bound) == (1, 0, -1, -1)


def test_positive_braid_cobordism_skips_non_coprime_widths():
    # x+ = 4 on 3 strands would allow l = 4; on 2 strands gcd(2, 4) = 2 forces l = 5
    c = positive_braid_cobordism_check(BraidWord(3, (1, 2, 1, 2)))
    assert c.l == 4
    gen = admissible_torus_widths(2, 4)
    assert next(gen) == 5
    gen = admissible_torus_widths(6, 7)
    assert [next(gen) for _ in range(3)] == [7, 11, 13]


def test_positive_braid_cobordism_rejects():
    with pytest.raises(ValueError, match="negative"):
        positive_braid_cobordism_check(BraidWord(2, (1, -1, 1)))
    with pytest.raises(NotAKnotError):
        positive_braid_cobordism_check(BraidWord(2, (1, 1)))
    with pytest.raises(ValueError, match="not admissible"):
        positive_braid_cobordism_check(torus_braid(2, 3), l=4)
    with pytest.raises(ValueError, match="not admissible"):
        positive_braid_cobordism_check(torus_braid(2, 3), l=1)


def test_torus_chain_identity_symbolic():
    n, l, x = sympy.symbols("n l x")
    torus = (n - 1) * (l - 1) - 1
    chi = x + l - l * n
    assert sympy.expand(torus + chi - (x - n)) == 0


@given(braids(positive=True), st.integers(0, 4))
def test_cobordism_identity_for_several_widths(b, skip):
    if not is_knot_closure(b):
        return
    x_plus, _ = crossing_counts(b)
    gen = admissible_torus_widths(b.strands, x_plus)
    for _ in range(skip):
        next(gen)
    c = positive_braid_cobordism_check(b, next(gen))
    assert math.gcd(b.strands, c.l) == 1 and c.l >= x_plus
    assert c.recovered_bound == x_plus - b.strands


# resolution

@pytest.mark.parametrize(
    "b, expected",
    [
        (torus_braid(2, 3), (1, 0, 1)),
        (BraidWord(2, (-1, -1, -1)), (1, 3, -5)),
        (BraidWord(3, (1, 1, 2, 2, -1, 2)), (3, 1, 1)),
    ],
)
def test_resolution_examples(b, expected):
    d = resolution_bound_decomposition(b)
    assert (d.positive_bound, d.switches, d.final_bound) == expected


def test_resolution_rejects_links():
    with pytest.raises(NotAKnotError):
        resolution_bound_decomposition(BraidWord(3, (1, 1, 2, 2, -1)))


@given(braids())
def test_resolution_final_bound_is_self_linking(b):
    if not is_knot_closure(b):
        return
    d = resolution_bound_decomposition(b)
    assert d.final_bound == self_linking(b)
    assert d.final_bound == d.positive_bound - 2 * d.switches


# s-tilde

def test_s_tilde_relations():
    assert s_tilde_relations(s_sharp=1) == (0, 2)
    assert s_tilde_relations(s_tilde_times_two=0) == (-1, 1)
    assert s_tilde_relations(s_sharp=7) == (6, 8)
    with pytest.raises(ValueError):
        s_tilde_relations()
    with pytest.raises(ValueError):
        s_tilde_relations(s_sharp=1, s_tilde_times_two=2)


@given(st.integers(-100, 100))
def test_s_tilde_relations_are_symmetric(v):
    lo, hi = s_tilde_relations(s_sharp=v)
    for w in range(lo, hi + 1):
        a, b = s_tilde_relations(s_tilde_times_two=w)
        assert a <= v <= b


# report structure

def test_bound_validation():
    step = (DerivationStep("sharp_bennequin"),)
    with pytest.raises(ValueError):
        Bound("s_sharp", "lower", 1, ())
    with pytest.raises(ValueError):
        Bound("nonsense", "lower", 1, step)
    with pytest.raises(ValueError):
        Bound("s_sharp", "sideways", 1, step)
    with pytest.raises(ValueError):
        Bound("g4", "lower", Fraction(1, 2), step)
    with pytest.raises(ValueError):
        DerivationStep("made_up_rule")
    half = Bound("s_tilde", "lower", Fraction(3, 2), (DerivationStep("s_tilde_bennequin"),))
    assert half.value_times_two == 3
    assert half.to_dict()["value"] == 1.5


def test_report_rejects_crossed_bounds():
    lo = Bound("s_sharp", "lower", 3, (DerivationStep("sharp_bennequin"),))
    hi = Bound("s_sharp", "upper", 2, (DerivationStep("cobordism_inequality"),))
    with pytest.raises(ValueError, match="inconsistent"):
        BoundReport({}, (lo, hi))
    ok = BoundReport({}, (lo, Bound("s_sharp", "upper", 3, (DerivationStep("cobordism_inequality"),))))
    assert ok.lower("s_sharp") == ok.upper("s_sharp") == 3


def test_report_serialization_fields():
    d = sharp_bound_from_braid(torus_braid(2, 3)).to_dict()
    assert set(d) == {"subject", "bounds"}
    for entry in d["bounds"]:
        assert entry["target"] in TARGETS
        assert {"target", "direction", "value", "derivation"} <= set(entry)
        assert ("value_times_two" in entry) == (entry["target"] == "s_tilde")
        for step in entry["derivation"]:
            assert set(step) == {"rule", "statement", "detail"}
