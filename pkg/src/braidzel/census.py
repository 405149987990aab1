"""Census enumeration over orientable pretzel surfaces.

Rows stream in canonical order (k ascending, twist tuples lexicographic)
and every emitted value is an exact integer, boolean, or absent, so two
runs with the same parameters are byte-identical.  Optional dedupe keeps
one representative per rotation/reversal class (those surfaces are
isotopic) and verifies on the fly that the discarded variants would have
carried identical invariants.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, fields

from . import qp
from .errors import InternalInvariantError, SurfaceSyntaxError
from .formats import format_pretzel
from .seifert import determinant, seifert_matrix, signature
from .slice_bounds import slice_report
from .surfaces import pretzel, profile


@dataclass(frozen=True)
class CensusRow:
    k: int
    twists: tuple[int, ...]
    orientable: bool
    boundary_components: int
    is_knot: bool
    qp_status: str
    chi_s_exact: int | None
    chi_s_subset_bound: int | None
    chi_s_sign_bound: int
    chi_s_combined: int | None
    formula_differs: bool
    gs_lower: int | None
    signature: int | None
    determinant: int | None
    yu_family: bool


COLUMNS: tuple[str, ...] = tuple(f.name for f in fields(CensusRow))

# columns that must agree across a rotation/reversal class (the surfaces
# are isotopic, so everything except the twist labelling is shared)
_INVARIANT_COLUMNS: tuple[str, ...] = tuple(
    c for c in COLUMNS if c not in ("twists",)
)


def is_yu_family(twists) -> bool:
    """Three odd twists whose pairwise products sum to -1: the boundary knot
    is algebraically slice, so only the quasipositivity route can obstruct
    sliceness."""
    t = tuple(twists)
    if len(t) != 3 or any(x % 2 == 0 for x in t):
        return False
    p, q, r = t
    return p * q + q * r + r * p == -1


def build_row(twists) -> CensusRow:
    """Compute every census column for one orientable pretzel."""
    t = tuple(int(x) for x in twists)
    p = pretzel(*t)
    prof = profile(p)
    verdict = qp.pretzel_qp(t)
    report = slice_report(t)
    sig = det = None
    if all(x % 2 for x in t):
        v = seifert_matrix(p)
        sig = signature(v)
        det = determinant(v)
    differs = (
        report.chi_s_subset_bound is None
        or report.chi_s_sign_bound != report.chi_s_subset_bound
    )
    return CensusRow(
        k=p.k,
        twists=t,
        orientable=prof.orientable,
        boundary_components=prof.boundary_components,
        is_knot=report.is_knot,
        qp_status=verdict.status.value,
        chi_s_exact=report.chi_s_exact,
        chi_s_subset_bound=report.chi_s_subset_bound,
        chi_s_sign_bound=report.chi_s_sign_bound,
        chi_s_combined=report.chi_s_combined,
        formula_differs=differs,
        gs_lower=report.gs_lower,
        signature=sig,
        determinant=det,
        yu_family=is_yu_family(t),
    )


def orientable_twist_tuples(k: int, tmax: int, odd_only: bool = False):
    """All orientable twist tuples (one parity class each) in lex order."""
    odd_vals = [t for t in range(-tmax, tmax + 1) if t % 2]
    even_vals = [t for t in range(-tmax, tmax + 1) if t % 2 == 0]
    streams = [itertools.product(odd_vals, repeat=k)]
    if not odd_only:
        streams.append(itertools.product(even_vals, repeat=k))
    yield from heapq.merge(*streams)


def dihedral_orbit(twists) -> list[tuple[int, ...]]:
    """All rotations of the tuple and of its reversal."""
    t = tuple(twists)
    k = len(t)
    orbit = set()
    for base in (t, tuple(reversed(t))):
        for r in range(k):
            orbit.add(base[r:] + base[:r])
    return sorted(orbit)


def canonical_representative(twists) -> tuple[int, ...]:
    return dihedral_orbit(twists)[0]


_FILTER_NAMES = {
    "qp": lambda row: row.qp_status in ("QuasipositiveExact", "Quasipositive"),
    "is_knot": lambda row: row.is_knot,
    "not_slice": lambda row: row.gs_lower is not None and row.gs_lower >= 1,
    "yu_family": lambda row: row.yu_family,
    "formula_differs": lambda row: row.formula_differs,
    "orientable": lambda row: row.orientable,
}


def parse_filter(expr: str):
    """A conjunction of flag names, ','/'&' separated, '!' for negation."""
    tokens = [t.strip() for t in expr.replace("&", ",").split(",") if t.strip()]
    tests = []
    for token in tokens:
        negate = token.startswith("!")
        name = token[1:].strip() if negate else token
        if name not in _FILTER_NAMES:
            raise SurfaceSyntaxError(
                f"unknown filter {name!r}; choose from {sorted(_FILTER_NAMES)}", 0
            )
        tests.append((negate, _FILTER_NAMES[name]))

    def accept(row: CensusRow) -> bool:
        return all(test(row) != negate for negate, test in tests)

    return accept


def census_rows(
    k_range: tuple[int, int],
    tmax: int,
    odd_only: bool = False,
    filter_expr: str = "",
    dedupe: bool = False,
):
    """Stream census rows in canonical order."""
    accept = parse_filter(filter_expr)
    lo, hi = k_range
    for k in range(lo, hi + 1):
        for twists in orientable_twist_tuples(k, tmax, odd_only):
            if dedupe:
                if twists != canonical_representative(twists):
                    continue
                row = build_row(twists)
                _check_orbit_invariants(row)
            else:
                row = build_row(twists)
            if accept(row):
                yield row


def _check_orbit_invariants(row: CensusRow) -> None:
    for variant in dihedral_orbit(row.twists):
        if variant == row.twists:
            continue
        other = build_row(variant)
        for col in _INVARIANT_COLUMNS:
            if getattr(other, col) != getattr(row, col):
                raise InternalInvariantError(
                    f"rotation/reversal variant {variant} of {row.twists} "
                    f"disagrees on {col}: {getattr(other, col)!r} vs {getattr(row, col)!r}"
                )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return format_pretzel(value)
    return str(value)


def render_csv(rows):
    """Yield CSV lines (no trailing newline on each)."""
    yield ",".join(COLUMNS)
    for row in rows:
        cells = []
        for col in COLUMNS:
            text = _cell(getattr(row, col))
            if "," in text:
                text = f'"{text}"'
            cells.append(text)
        yield ",".join(cells)


def render_jsonl(rows):
    """Yield one JSON object per row, keys in column order."""
    import json

    for row in rows:
        record = {}
        for col in COLUMNS:
            value = getattr(row, col)
            record[col] = list(value) if isinstance(value, tuple) else value
        yield json.dumps(record, separators=(",", ":"))
