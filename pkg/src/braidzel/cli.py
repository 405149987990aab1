"""Command-line front end.

Subcommands: ``analyze`` (full report for one surface), ``certify`` (emit
and re-verify the move trace that trades a nonnegative twist for positive
braiding), ``moves apply`` (apply listed moves with a replayable trace),
``census`` (stream pretzel invariants as CSV or JSON lines).

Exit codes: 0 ok, 2 parse/usage error, 3 precondition failure,
4 internal inconsistency.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__, qp
from .census import census_rows, render_csv, render_jsonl
from .errors import InternalInvariantError, PreconditionError, SurfaceSyntaxError
from .formats import (
    braidzel_record,
    canonical_surface_text,
    format_braid_text,
    format_pretzel,
    format_rational,
    parse_move_token,
    parse_surface,
    slice_report_record,
    trace_from_record,
    trace_record,
    verdict_record,
)
from .kernels import BACKEND
from .moves import apply_moves, nonneg_target_word, normalize_to_nonnegative, verify_trace
from .garside import words_equal
from .seifert import determinant, gs_signature_lower, seifert_matrix, signature
from .slice_bounds import slice_report
from .surfaces import pretzel, profile

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4

SCHEMA = 1


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_or_exit(spec: str):
    try:
        return parse_surface(spec)
    except SurfaceSyntaxError as exc:
        _fail(EXIT_PARSE, str(exc))


def _emit(record: dict) -> None:
    click.echo(json.dumps(record, indent=2))


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Decide quasipositivity of pretzel and braidzel surfaces and bound the
    slice genus of their boundary links."""


@main.command()
@click.argument("spec")
@click.option("--depth", type=int, default=None, help="Move-search depth for the decision.")
@click.option("--verbose", is_flag=True, help="Include the Seifert matrix dump.")
def analyze(spec: str, depth: int | None, verbose: bool) -> None:
    """Full report for one surface: profile, quasipositivity, slice bounds."""
    parsed = _parse_or_exit(spec)
    bz = parsed.braidzel
    prof = profile(bz)
    record: dict = {
        "version": __version__,
        "schema": SCHEMA,
        "kernel": BACKEND,
        "input": canonical_surface_text(bz),
        "form": parsed.form,
        "profile": {
            "euler": prof.euler,
            "orientable": prof.orientable,
            "boundary_components": prof.boundary_components,
            "genus": prof.genus,
        },
    }
    if not prof.orientable:
        _emit(record)
        click.echo("error: non-orientable surface; only the profile applies", err=True)
        sys.exit(EXIT_PRECONDITION)
    try:
        record["qp"] = verdict_record(qp.decide(bz, search_depth=depth))
        if bz.is_pretzel():
            report = slice_report(bz.twists)
            record["slice"] = slice_report_record(report)
            if all(t % 2 for t in bz.twists):
                v = seifert_matrix(bz)
                record["seifert"] = {
                    "signature": signature(v),
                    "determinant": determinant(v),
                    "gs_signature_lower": format_rational(gs_signature_lower(v)),
                }
                if verbose:
                    record["seifert"]["matrix"] = [list(r) for r in v.rows]
    except InternalInvariantError as exc:
        _fail(EXIT_INTERNAL, str(exc))
    _emit(record)


@main.command()
@click.argument("spec")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the trace here instead of stdout.")
def certify(spec: str, out: str | None) -> None:
    """Emit the verified normalization trace for a quasipositive pretzel.

    The input must be an orientable pretzel with every pairwise twist sum
    negative; a nonnegative twist (there can be at most one) is rotated to
    the front first.  The trace is re-read and re-verified before exit.
    """
    parsed = _parse_or_exit(spec)
    bz = parsed.braidzel
    if not bz.is_pretzel():
        _fail(EXIT_PRECONDITION, "certify applies to trivially braided surfaces")
    twists = bz.twists
    rotation = next((i for i, t in enumerate(twists) if t >= 0), 0)
    rotated = twists[rotation:] + twists[:rotation]
    try:
        result, trace = normalize_to_nonnegative(pretzel(*rotated))
    except PreconditionError as exc:
        _fail(EXIT_PRECONDITION, f"{exc} (witness: {exc.witness})")
    rounds = max(0, rotated[0])
    payload = {
        "version": __version__,
        "schema": SCHEMA,
        "input": format_pretzel(twists),
        "rotation": rotation,
        "start": format_pretzel(rotated),
        "rounds": rounds,
        "target_braiding": format_braid_text(nonneg_target_word(bz.k, rounds)),
        "final": braidzel_record(result),
        "trace": trace_record(trace),
    }
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        with open(out, "r", encoding="utf-8") as fh:
            reread = json.load(fh)
    else:
        click.echo(text)
        reread = json.loads(text)

    replayed = trace_from_record(reread["trace"])
    final = replayed.final
    ok = (
        verify_trace(replayed)
        and final.twists == result.twists
        and words_equal(final.braid, nonneg_target_word(bz.k, rounds))
        and qp.is_nearly_negative(final.twists)
    )
    if not ok:
        _fail(EXIT_INTERNAL, "re-read trace failed verification")
    click.echo(
        f"verified: {len(replayed)} steps, final twists {format_pretzel(final.twists)}",
        err=True,
    )


@main.group()
def moves() -> None:
    """Apply and inspect surface rewrite moves."""


@moves.command("apply")
@click.argument("spec")
@click.argument("move_tokens", nargs=-1, required=True, metavar="MOVE...")
def moves_apply(spec: str, move_tokens: tuple[str, ...]) -> None:
    """Apply moves in order (M1..M6, trailing ' for the inverse)."""
    parsed = _parse_or_exit(spec)
    try:
        to_apply = [parse_move_token(t) for t in move_tokens]
    except SurfaceSyntaxError as exc:
        _fail(EXIT_PARSE, str(exc))
    trace = apply_moves(parsed.braidzel, to_apply)
    if not verify_trace(trace):
        _fail(EXIT_INTERNAL, "freshly built trace failed verification")
    _emit(
        {
            "version": __version__,
            "schema": SCHEMA,
            "input": canonical_surface_text(parsed.braidzel),
            "trace": trace_record(trace),
            "final": braidzel_record(trace.final),
        }
    )


def _parse_k_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2 and parts[0] and parts[1]:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise click.UsageError(
            f"--k must be N or A..B with both bounds given, got {text!r}"
        ) from None
    if lo < 1:
        raise click.UsageError("--k lower bound must be >= 1")
    return lo, hi


@main.command()
@click.option("--k", "k_range", required=True, help="Band count: N or A..B (bounded).")
@click.option("--tmax", type=int, required=True, help="Twist magnitude bound (>= 0).")
@click.option("--odd-only", is_flag=True, help="Only odd twist values.")
@click.option("--filter", "filter_expr", default="",
              help="Conjunction of flags (qp, is_knot, not_slice, yu_family, "
                   "formula_differs), ','-separated, '!' negates.")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv")
@click.option("--dedupe", is_flag=True,
              help="One representative per rotation/reversal class.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def census(k_range: str, tmax: int, odd_only: bool, filter_expr: str, fmt: str,
           dedupe: bool, out: str | None) -> None:
    """Stream invariants of all orientable pretzels in the box."""
    lo, hi = _parse_k_range(k_range)
    if tmax < 0:
        raise click.UsageError("--tmax must be >= 0")
    try:
        rows = census_rows((lo, hi), tmax, odd_only=odd_only,
                           filter_expr=filter_expr, dedupe=dedupe)
        render = render_csv if fmt == "csv" else render_jsonl
        lines = render(rows)
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                for line in lines:
                    fh.write(line + "\n")
        else:
            for line in lines:
                click.echo(line)
    except SurfaceSyntaxError as exc:
        _fail(EXIT_PARSE, str(exc))
    except InternalInvariantError as exc:
        _fail(EXIT_INTERNAL, str(exc))


if __name__ == "__main__":
    main()
