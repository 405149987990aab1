import json

from click.testing import CliRunner

from braidzel.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_analyze_showcase():
    result = run("analyze", "P(3,-5,-7)")
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["input"] == "P(3,-5,-7)"
    assert record["qp"]["status"] == "QuasipositiveExact"
    assert record["slice"]["chi_s_exact"] == -1
    assert record["slice"]["gs_lower"] == 1
    assert record["slice"]["not_slice"] is True
    assert record["seifert"]["determinant"] == 1
    assert "version" in record and "schema" in record


def test_analyze_embeds_canonical_form():
    result = run("analyze", "P( 3 , -5 , -7 )")
    record = json.loads(result.stdout)
    assert record["input"] == "P(3,-5,-7)"


def test_analyze_nonorientable_profile_only():
    result = run("analyze", "P(1,2)")
    assert result.exit_code == 3
    record = json.loads(result.stdout)
    assert record["profile"]["orientable"] is False
    assert "qp" not in record and "slice" not in record


def test_analyze_parse_error():
    assert run("analyze", "P()").exit_code == 2
    assert run("analyze", "nonsense").exit_code == 2


def test_analyze_annulus():
    record = json.loads(run("analyze", "P(-1,-1)").stdout)
    assert record["slice"]["chi_s_exact"] == 0
    assert record["profile"]["boundary_components"] == 2


def test_analyze_record_form_and_verbose():
    result = run("analyze", '{"k": 2, "braid": "s1 s1", "twists": [0, 0]}')
    record = json.loads(result.stdout)
    assert record["qp"]["status"] == "QuasipositiveExact"
    assert "slice" not in record  # braided surface: no pretzel report
    result = run("analyze", "P(-1,-1,-1)", "--verbose")
    record = json.loads(result.stdout)
    assert record["seifert"]["matrix"] == [[-1, 0], [-1, -1]]


def test_certify_writes_and_verifies(tmp_path):
    out = tmp_path / "trace.json"
    result = run("certify", "P(3,-5,-7)", "--out", str(out))
    assert result.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["rounds"] == 3
    assert len(payload["trace"]["steps"]) == 6
    assert payload["final"]["twists"] == [0, -4, -2]


def test_certify_stdout_empty_trace():
    result = run("certify", "P(-1,-1,-1)")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["trace"]["steps"] == [] and payload["rounds"] == 0


def test_certify_rotates_nonnegative_twist_to_front():
    result = run("certify", "P(-5,3,-7)")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["rotation"] == 1
    assert payload["start"] == "P(3,-7,-5)"


def test_certify_precondition_failure():
    result = run("certify", "P(1,1,-3)")
    assert result.exit_code == 3
    assert "(1, 2)" in result.stderr


def test_certify_rejects_braided_surface():
    result = run("certify", '{"k": 2, "braid": "s1", "twists": [-1, -1]}')
    assert result.exit_code == 3


def test_moves_apply():
    result = run("moves", "apply", "P(1,2,3)", "M3", "M3'")
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["final"]["twists"] == [1, 2, 3]
    assert [s["move"] for s in record["trace"]["steps"]] == ["M3", "M3"]
    assert [s["dir"] for s in record["trace"]["steps"]] == ["fwd", "inv"]


def test_moves_apply_bad_token():
    assert run("moves", "apply", "P(1,2)", "M9").exit_code == 2


def test_census_csv_determinism():
    a = run("census", "--k", "3", "--tmax", "2", "--format", "csv")
    b = run("census", "--k", "3", "--tmax", "2", "--format", "csv")
    assert a.exit_code == 0 and a.stdout == b.stdout
    lines = a.stdout.strip().split("\n")
    assert lines[0].startswith("k,twists,orientable")
    assert len(lines) == 1 + (3**3 + 2**3)  # even values {-2,0,2}, odd {-1,1}


def test_census_jsonl_filter_yu():
    result = run(
        "census", "--k", "3", "--tmax", "7", "--odd-only",
        "--filter", "yu_family,not_slice", "--format", "jsonl",
    )
    assert result.exit_code == 0
    rows = [json.loads(line) for line in result.stdout.strip().split("\n")]
    assert [3, -5, -7] in [r["twists"] for r in rows]
    assert all(r["determinant"] == 1 for r in rows)


def test_census_dedupe_and_out_file(tmp_path):
    out = tmp_path / "census.csv"
    result = run("census", "--k", "2..3", "--tmax", "2", "--dedupe", "--out", str(out))
    assert result.exit_code == 0
    content = out.read_text()
    assert content.startswith("k,twists")
    again = tmp_path / "census2.csv"
    run("census", "--k", "2..3", "--tmax", "2", "--dedupe", "--out", str(again))
    assert content == again.read_text()


def test_census_empty_range_is_ok():
    result = run("census", "--k", "5..4", "--tmax", "1")
    assert result.exit_code == 0
    assert result.stdout.strip().startswith("k,twists")  # header,
    assert "\n" not in result.stdout.strip()  # and nothing else


def test_census_rejects_unbounded_or_bad_ranges():
    assert run("census", "--k", "3..", "--tmax", "1").exit_code == 2
    assert run("census", "--k", "x", "--tmax", "1").exit_code == 2
    assert run("census", "--k", "0", "--tmax", "1").exit_code == 2
    assert run("census", "--k", "3", "--tmax", "-1").exit_code == 2
    assert run("census", "--k", "3", "--tmax", "1", "--filter", "bogus").exit_code == 2


def test_version_flag():
    result = run("--version")
    assert result.exit_code == 0 and "0.1.0" in result.stdout


def test_analyze_trace_witness_for_braided_surface():
    # positive braiding reachable in one inverse half-twist move: the
    # verdict carries a replayable trace, embedded in the record
    from braidzel.formats import trace_from_record
    from braidzel.moves import verify_trace

    spec = '{"k": 3, "braid": "s2 s2\' s2\' s1\' s2\'", "twists": [-1, -3, -3]}'
    result = run("analyze", spec)
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    witness = record["qp"]["witness"]
    assert record["qp"]["status"] == "Quasipositive"
    assert witness["kind"] == "trace"
    assert verify_trace(trace_from_record(witness["trace"]))


def test_analyze_unknown_verdict_exits_zero():
    spec = '{"k": 3, "braid": "s2 s2\' s2\' s1\' s2\'", "twists": [-1, -3, -3]}'
    result = run("analyze", spec, "--depth", "0")
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["qp"]["status"] == "Unknown"
    assert record["qp"]["witness"] is None
