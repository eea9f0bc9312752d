"""
Externally asserted invariant values, checked against the encoded inequalities.

A corpus is a CSV file with the header ``id,kind,strands,word,invariant,value``.
``kind`` is ``braid`` or ``front``; ``strands`` is blank for fronts and may be
blank for braids (then inferred from the word). ``invariant`` is one of
``s_sharp``, ``s``, ``g4``, ``sl_max`` or ``s_tilde_times_two``. Fields are not
quoted; every row must have exactly six fields.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import math
from pathlib import Path

from . import braid as br
from . import front as fr
from .bounds import torus_knot_invariants

HEADER = ("id", "kind", "strands", "word", "invariant", "value")
INVARIANTS = ("s_sharp", "s", "g4", "sl_max", "s_tilde_times_two")
KINDS = ("braid", "front")

CONSISTENT = "consistent"
VIOLATED = "violated"


class CorpusError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class CorpusRecord:
    id: str
    kind: str
    strands: int | None
    word: str
    invariant: str
    value: int
    row: int = 0

    @property
    def representative(self) -> tuple[str, int | None, str]:
        return self.kind, self.strands, self.word


@dataclasses.dataclass(frozen=True)
class VerificationFinding:
    id: str
    inequality: str
    relation: str
    observed: dict
    verdict: str

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _parse_representative(kind: str, strands: int | None, word: str):
    if kind == "braid":
        return br.parse_braid(word, strands)
    return fr.parse_front(word)


def read_corpus(text: str) -> list[CorpusRecord]:
    """Parse and validate corpus text; duplicates are merged, conflicts rejected."""
    rows = list(csv.reader(io.StringIO(text), quoting=csv.QUOTE_NONE))
    if not rows or tuple(f.strip() for f in rows[0]) != HEADER:
        raise CorpusError(f"row 1: header must be {','.join(HEADER)}")
    records: list[CorpusRecord] = []
    seen: dict[tuple[str, str], CorpusRecord] = {}
    reps: dict[str, CorpusRecord] = {}
    for rownum, fields in enumerate(rows[1:], start=2):
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) != len(HEADER):
            raise CorpusError(f"row {rownum}: expected {len(HEADER)} fields, got {len(fields)}")
        rid, kind, strands_text, word, invariant, value_text = (f.strip() for f in fields)
        if not rid:
            raise CorpusError(f"row {rownum}: empty id")
        if kind not in KINDS:
            raise CorpusError(f"row {rownum}: kind must be one of {', '.join(KINDS)}, got {kind!r}")
        if invariant not in INVARIANTS:
            raise CorpusError(f"row {rownum}: unknown invariant {invariant!r}")
        try:
            value = int(value_text)
        except ValueError:
            raise CorpusError(f"row {rownum}: value {value_text!r} is not an integer") from None
        strands = None
        if strands_text:
            if kind == "front":
                raise CorpusError(f"row {rownum}: strands must be blank for fronts")
            try:
                strands = int(strands_text)
            except ValueError:
                raise CorpusError(f"row {rownum}: strands {strands_text!r} is not an integer") from None
        try:
            _parse_representative(kind, strands, word)
        except ValueError as exc:
            raise CorpusError(f"row {rownum}: unparseable {kind}: {exc}") from None
        rec = CorpusRecord(rid, kind, strands, word, invariant, value, rownum)
        first = reps.setdefault(rid, rec)
        if first.representative != rec.representative:
            raise CorpusError(f"rows {first.row} and {rownum}: id {rid!r} has two different representatives")
        key = (rid, invariant)
        if key in seen:
            if seen[key].value != value:
                raise CorpusError(
                    f"rows {seen[key].row} and {rownum}: conflicting {invariant} for {rid!r} "
                    f"({seen[key].value} vs {value})"
                )
            continue
        seen[key] = rec
        records.append(rec)
    return records


def load_corpus(path) -> list[CorpusRecord]:
    return read_corpus(Path(path).read_text(encoding="utf-8"))


def write_corpus(records, fh) -> None:
    fh.write(",".join(HEADER) + "\n")
    for r in records:
        strands = "" if r.strands is None else str(r.strands)
        fh.write(f"{r.id},{r.kind},{strands},{r.word},{r.invariant},{r.value}\n")


def torus_corpus(max_q: int = 13) -> list[CorpusRecord]:
    """Records for every coprime 2 <= p < q <= max_q, straight from the torus knot values."""
    out = []
    for q in range(3, max_q + 1):
        for p in range(2, q):
            if math.gcd(p, q) != 1:
                continue
            t = torus_knot_invariants(p, q)
            b = br.torus_braid(p, q)
            word = br.render_braid(b)
            for inv in ("s_sharp", "s", "g4", "sl_max"):
                out.append(CorpusRecord(f"T{p}_{q}", "braid", p, word, inv, getattr(t, inv)))
    return out


def _observed_sl(kind: str, strands: int | None, word: str) -> tuple[int | None, str | None]:
    """Self-linking number of the best transverse knot the representative gives, or an error."""
    try:
        rep = _parse_representative(kind, strands, word)
        if kind == "braid":
            br.require_knot(rep)
            return br.self_linking(rep), None
        of = fr.orient(rep)
        return fr.thurston_bennequin(of) + abs(fr.rotation_number(of)), None
    except ValueError as exc:
        return None, str(exc)


def _finding(rid, inequality, relation, holds, **observed) -> VerificationFinding:
    return VerificationFinding(rid, inequality, relation, observed, CONSISTENT if holds else VIOLATED)


def verify_corpus(records) -> list[VerificationFinding]:
    """One finding per applicable inequality per knot, in first-appearance order of ids."""
    by_id: dict[str, dict] = {}
    reps: dict[str, tuple] = {}
    for r in records:
        by_id.setdefault(r.id, {})[r.invariant] = r.value
        reps.setdefault(r.id, r.representative)

    findings = []
    for rid, values in by_id.items():
        sl, error = _observed_sl(*reps[rid])
        if sl is None:
            findings.append(
                VerificationFinding(rid, "knot_representative", "representative is a knot", {"error": error}, VIOLATED)
            )
            continue
        ssharp = values.get("s_sharp")
        s = values.get("s")
        g4 = values.get("g4")
        slmax = values.get("sl_max")
        st2 = values.get("s_tilde_times_two")
        if ssharp is not None:
            findings.append(_finding(rid, "sharp_bennequin", "sl <= s_sharp", sl <= ssharp, sl=sl, s_sharp=ssharp))
        if s is not None:
            findings.append(_finding(rid, "plamenevskaya_shumakovitch", "sl <= s - 1", sl <= s - 1, sl=sl, s=s))
        if g4 is not None:
            findings.append(_finding(rid, "slice_bennequin", "sl <= 2*g4 - 1", sl <= 2 * g4 - 1, sl=sl, g4=g4))
            if ssharp is not None:
                findings.append(_finding(rid, "genus_bound", "s_sharp <= 2*g4", ssharp <= 2 * g4, s_sharp=ssharp, g4=g4))
            if s is not None:
                findings.append(_finding(rid, "genus_bound", "s <= 2*g4", s <= 2 * g4, s=s, g4=g4))
        if slmax is not None:
            findings.append(_finding(rid, "maximal_self_linking", "sl <= sl_max", sl <= slmax, sl=sl, sl_max=slmax))
            if ssharp is not None:
                findings.append(
                    _finding(rid, "sharp_bennequin", "sl_max <= s_sharp", slmax <= ssharp, sl_max=slmax, s_sharp=ssharp)
                )
            if s is not None:
                findings.append(
                    _finding(rid, "plamenevskaya_shumakovitch", "sl_max <= s - 1", slmax <= s - 1, sl_max=slmax, s=s)
                )
            if g4 is not None:
                findings.append(
                    _finding(rid, "slice_bennequin", "sl_max <= 2*g4 - 1", slmax <= 2 * g4 - 1, sl_max=slmax, g4=g4)
                )
        if st2 is not None:
            findings.append(
                _finding(rid, "s_tilde_bennequin", "sl <= s_tilde_times_two - 1", sl <= st2 - 1,
                         sl=sl, s_tilde_times_two=st2)
            )
            if ssharp is not None:
                findings.append(
                    _finding(rid, "s_tilde_comparison", "|s_sharp - s_tilde_times_two| <= 1",
                             abs(ssharp - st2) <= 1, s_sharp=ssharp, s_tilde_times_two=st2)
                )
    return findings


def violations(findings) -> list[VerificationFinding]:
    return [f for f in findings if f.verdict == VIOLATED]
