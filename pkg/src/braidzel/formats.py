"""Text and JSON forms for surfaces, braid words, verdicts, and traces.

Braid word grammar (whitespace separated, both token styles accepted and
mixable): ``s2 s1'`` means generator 2 then the inverse of generator 1; the
compact form uses signed integers, ``2 -1``.  Strand count is given
explicitly where a record carries it, otherwise inferred as the largest
index plus one.

Surface forms accepted everywhere a command takes a surface:

* pretzel shorthand: ``P(3,-5,-7)``
* structured record: ``{"k": 3, "braid": "s1 s2'", "twists": [3,-5,-7]}``

Parsing failures raise :class:`~braidzel.errors.SurfaceSyntaxError` with a
byte offset.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import SurfaceSyntaxError
from .moves import Move, MoveKind, MoveTrace
from .surfaces import Braidzel, pretzel
from .words import BraidWord

_TOKEN = re.compile(r"\S+")
_S_FORM = re.compile(r"^s(\d+)(')?$")
_INT_FORM = re.compile(r"^[+-]?\d+$")


def parse_braid_text(text: str, strands: int | None = None) -> BraidWord:
    """Parse a braid word; strand count inferred as max index + 1 if absent."""
    letters: list[int] = []
    for match in _TOKEN.finditer(text):
        token = match.group(0)
        m = _S_FORM.match(token)
        if m:
            idx = int(m.group(1))
            letters.append(-idx if m.group(2) else idx)
            continue
        if _INT_FORM.match(token):
            idx = int(token)
            if idx == 0:
                raise SurfaceSyntaxError("generator index 0 is not allowed", match.start())
            letters.append(idx)
            continue
        raise SurfaceSyntaxError(f"unrecognised braid token {token!r}", match.start())
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    for x in letters:
        if abs(x) > strands - 1:
            raise SurfaceSyntaxError(
                f"generator {x} needs more than {strands} strands", 0
            )
    return BraidWord(strands, tuple(letters))


def format_braid_text(w: BraidWord) -> str:
    """Canonical token form: ``s1 s2'``."""
    return " ".join(f"s{abs(x)}" + ("'" if x < 0 else "") for x in w.letters)


@dataclass(frozen=True)
class SurfaceSpec:
    """A parsed surface plus its source text and form."""

    braidzel: Braidzel
    form: str  # "pretzel" | "record"
    source: str = field(compare=False, default="")


def _parse_pretzel_text(text: str) -> SurfaceSpec:
    stripped = text.strip()
    base = text.index(stripped[0]) if stripped else 0
    if not stripped.startswith("P(") or not stripped.endswith(")"):
        raise SurfaceSyntaxError("expected P(t1,t2,...)", base)
    inner = stripped[2:-1]
    if not inner.strip():
        raise SurfaceSyntaxError("a pretzel needs at least one twist", base + 2)
    twists = []
    offset = base + 2
    for part in inner.split(","):
        if not _INT_FORM.match(part.strip()):
            raise SurfaceSyntaxError(
                f"bad twist value {part.strip()!r}", offset + len(part) - len(part.lstrip())
            )
        twists.append(int(part))
        offset += len(part) + 1
    return SurfaceSpec(pretzel(*twists), "pretzel", text)


def _parse_record_text(text: str) -> SurfaceSpec:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SurfaceSyntaxError(f"bad record: {exc.msg}", exc.pos) from exc
    return SurfaceSpec(braidzel_from_record(record), "record", text)


def parse_surface(text: str) -> SurfaceSpec:
    """Parse either accepted surface form."""
    stripped = text.strip()
    if not stripped:
        raise SurfaceSyntaxError("empty surface text", 0)
    if stripped.startswith("{"):
        return _parse_record_text(text)
    if stripped.startswith("P") or stripped.startswith("p"):
        return _parse_pretzel_text(text)
    raise SurfaceSyntaxError(
        "surface must be P(...) shorthand or a {...} record", len(text) - len(text.lstrip())
    )


def format_surface(spec: SurfaceSpec) -> str:
    """Canonical text preserving the source form; parse/format round-trips."""
    if spec.form == "pretzel":
        return format_pretzel(spec.braidzel.twists)
    return json.dumps(braidzel_record(spec.braidzel), separators=(", ", ": "))


def format_pretzel(twists) -> str:
    return "P(" + ",".join(str(t) for t in twists) + ")"


def canonical_surface_text(bz: Braidzel) -> str:
    """Pretzel shorthand when the braiding is trivial, record form otherwise."""
    if bz.is_pretzel():
        return format_pretzel(bz.twists)
    return json.dumps(braidzel_record(bz), separators=(", ", ": "))


def braidzel_record(bz: Braidzel) -> dict:
    return {
        "k": bz.k,
        "braid": format_braid_text(bz.braid),
        "twists": list(bz.twists),
    }


def braidzel_from_record(record) -> Braidzel:
    if not isinstance(record, dict):
        raise SurfaceSyntaxError("surface record must be an object", 0)
    missing = {"k", "twists"} - set(record)
    if missing:
        raise SurfaceSyntaxError(f"surface record missing {sorted(missing)}", 0)
    k = record["k"]
    twists = record["twists"]
    if not isinstance(k, int) or k < 1:
        raise SurfaceSyntaxError("k must be a positive integer", 0)
    if not isinstance(twists, list) or not all(isinstance(t, int) for t in twists):
        raise SurfaceSyntaxError("twists must be a list of integers", 0)
    if len(twists) != k:
        raise SurfaceSyntaxError(
            f"twist count {len(twists)} does not match k={k}", 0
        )
    braid = parse_braid_text(record.get("braid", ""), strands=k)
    return Braidzel(k, braid, tuple(twists))


def move_record(m: Move) -> dict:
    return {"move": m.kind.value, "dir": "inv" if m.inverse else "fwd"}


def move_from_record(record) -> Move:
    try:
        kind = MoveKind(record["move"])
        direction = record["dir"]
    except (KeyError, ValueError, TypeError) as exc:
        raise SurfaceSyntaxError(f"bad move record {record!r}", 0) from exc
    if direction not in ("fwd", "inv"):
        raise SurfaceSyntaxError(f"bad move direction {direction!r}", 0)
    return Move(kind, direction == "inv")


def parse_move_token(token: str) -> Move:
    """CLI move syntax: M1..M6, with a trailing ' or ~ for the inverse."""
    t = token.strip()
    inverse = t.endswith("'") or t.endswith("~")
    if inverse:
        t = t[:-1]
    try:
        kind = MoveKind(t.upper())
    except ValueError as exc:
        raise SurfaceSyntaxError(f"unknown move {token!r}", 0) from exc
    return Move(kind, inverse)


def trace_record(tr: MoveTrace) -> dict:
    return {
        "start": braidzel_record(tr.start),
        "steps": [
            {**move_record(m), "result": braidzel_record(bz)} for m, bz in tr.steps
        ],
    }


def trace_from_record(record) -> MoveTrace:
    try:
        start = braidzel_from_record(record["start"])
        steps = tuple(
            (move_from_record(step), braidzel_from_record(step["result"]))
            for step in record["steps"]
        )
    except (KeyError, TypeError) as exc:
        raise SurfaceSyntaxError(f"bad trace record: {exc}", 0) from exc
    return MoveTrace(start, steps)


def format_rational(value) -> int | str:
    """Exact rendering: an int when integral, else 'p/q'.  Never a float."""
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def verdict_record(verdict) -> dict:
    """Serialise a quasipositivity verdict with its witness."""
    from .qp import (
        AnnularEvidence,
        PairwiseEvidence,
        SufficiencyEvidence,
        TraceEvidence,
    )

    witness: dict | None = None
    if verdict.obstruction is not None:
        ob = verdict.obstruction
        witness = {
            "kind": "obstruction",
            "pair": [ob.i, ob.j],
            "twist_sum": ob.twist_sum,
            "crossing_double": ob.crossing_double,
        }
    cert = verdict.certificate
    if isinstance(cert, PairwiseEvidence):
        witness = {
            "kind": "pairwise",
            "worst_pair": list(cert.worst_pair),
            "worst_sum": cert.worst_sum,
        }
    elif isinstance(cert, AnnularEvidence):
        witness = {
            "kind": "annular",
            "twist_sum": cert.twist_sum,
            "crossing_double": cert.crossing_double,
        }
    elif isinstance(cert, SufficiencyEvidence):
        witness = {"kind": "sufficiency", "infimum": cert.infimum}
    elif isinstance(cert, TraceEvidence):
        witness = {
            "kind": "trace",
            "infimum": cert.final.infimum,
            "trace": trace_record(cert.trace),
        }
    return {"status": verdict.status.value, "witness": witness}


def slice_report_record(report) -> dict:
    return {
        "twists": list(report.twists),
        "chi_surface": report.chi_surface,
        "chi_s_exact": report.chi_s_exact,
        "chi_s_subset_bound": report.chi_s_subset_bound,
        "subset_witness": list(report.subset_witness) if report.subset_witness else None,
        "chi_s_sign_bound": report.chi_s_sign_bound,
        "sign_epsilon": report.sign_epsilon,
        "chi_s_combined": report.chi_s_combined,
        "is_knot": report.is_knot,
        "gs_lower": report.gs_lower,
        "not_slice": report.not_slice,
    }
