import itertools

import pytest

from braidzel.census import (
    COLUMNS,
    build_row,
    canonical_representative,
    census_rows,
    dihedral_orbit,
    is_yu_family,
    orientable_twist_tuples,
    parse_filter,
    render_csv,
    render_jsonl,
)
from braidzel.errors import SurfaceSyntaxError


def test_columns_order():
    assert COLUMNS[:6] == (
        "k",
        "twists",
        "orientable",
        "boundary_components",
        "is_knot",
        "qp_status",
    )
    assert "formula_differs" in COLUMNS and "yu_family" in COLUMNS


def test_yu_family():
    assert is_yu_family((3, -5, -7))  # -15 + 35 - 21 = -1
    assert not is_yu_family((3, -5, -9))
    assert not is_yu_family((2, -4, -6))  # even twists
    assert not is_yu_family((1, -1))


def test_build_row_showcase():
    row = build_row((3, -5, -7))
    assert row.qp_status == "QuasipositiveExact"
    assert row.chi_s_exact == -1 and row.chi_s_combined == -1
    assert row.is_knot and row.gs_lower == 1
    assert row.determinant == 1 and row.yu_family
    assert row.formula_differs  # sign bound 0 vs subset bound -1


def test_build_row_even_twists_have_no_seifert_columns():
    row = build_row((0, -2, -2))
    assert row.signature is None and row.determinant is None
    assert row.qp_status == "QuasipositiveExact"


def test_enumeration_is_lexicographic_and_orientable():
    tuples = list(orientable_twist_tuples(2, 2))
    assert tuples == sorted(tuples)
    assert all(len({t % 2 for t in tw}) == 1 for tw in tuples)
    odd = [tw for tw in tuples if tw[0] % 2]
    assert odd == list(itertools.product([-1, 1], repeat=2))
    assert len(tuples) == 4 + 9  # odd values {-1,1}, even values {-2,0,2}


def test_enumeration_odd_only():
    tuples = list(orientable_twist_tuples(3, 3, odd_only=True))
    assert len(tuples) == 4**3
    assert all(t % 2 for tw in tuples for t in tw)


def test_dihedral_orbit_and_canonical():
    orbit = dihedral_orbit((1, 2, 3))
    assert (2, 3, 1) in orbit and (3, 2, 1) in orbit
    assert canonical_representative((3, 1, 2)) == (1, 2, 3)
    assert canonical_representative((1, 2, 3)) == (1, 2, 3)


def test_filters():
    accept = parse_filter("qp,!is_knot")
    row_qp_knot = build_row((-1, -1, -1))
    row_qp_link = build_row((-1, -1))
    assert not accept(row_qp_knot)
    assert accept(row_qp_link)
    with pytest.raises(SurfaceSyntaxError):
        parse_filter("bogus")
    assert parse_filter("")(row_qp_knot)


def test_census_rows_qp_filter_matches_pairwise_criterion():
    rows = list(census_rows((3, 3), 3, filter_expr="qp"))
    expected = [
        tw
        for tw in orientable_twist_tuples(3, 3)
        if all(tw[i] + tw[j] < 0 for i in range(3) for j in range(i + 1, 3))
    ]
    assert [r.twists for r in rows] == expected


def test_census_dedupe_keeps_canonical_representatives():
    rows = list(census_rows((3, 3), 2, dedupe=True))
    reps = [r.twists for r in rows]
    assert all(tw == canonical_representative(tw) for tw in reps)
    full = {canonical_representative(tw) for tw in orientable_twist_tuples(3, 2)}
    assert set(reps) == full


def test_renderers_are_deterministic():
    rows1 = list(census_rows((2, 3), 2))
    rows2 = list(census_rows((2, 3), 2))
    assert list(render_csv(rows1)) == list(render_csv(rows2))
    assert list(render_jsonl(rows1)) == list(render_jsonl(rows2))
    header = next(iter(render_csv(rows1)))
    assert header.split(",") == list(COLUMNS)


def test_jsonl_values_are_exact():
    import json

    line = next(iter(render_jsonl([build_row((3, -5, -7))])))
    record = json.loads(line)
    assert record["twists"] == [3, -5, -7]
    assert record["gs_lower"] == 1 and record["signature"] == 0
    assert all(not isinstance(v, float) for v in record.values())
