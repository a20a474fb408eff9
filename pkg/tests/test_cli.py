import csv
import io
import json

import pytest

from lefschetz import cli, family
from lefschetz.quotient import FAILS_PROBABLY, GradedQuotient, WlpReport


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_wlp_json_and_exit_zero(capsys):
    code, out, _ = run(
        ["wlp", "-a", "2", "-b", "2", "-c", "2", "--beta", "1", "--gamma", "1"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["verdict"] == "HOLDS"
    assert record["certificate"] == "x - y - z"
    assert record["h"] == [1, 3, 1]
    assert record["D"] == 2
    assert record["covered"] is True
    assert "thm37" in record["flags"]


def test_slp_json(capsys):
    code, out, _ = run(
        ["slp", "-a", "3", "-b", "3", "-c", "2", "--beta", "1", "--gamma", "1"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["slp_verdict"] == "HOLDS"


def test_classify_output(capsys):
    code, out, _ = run(
        ["classify", "-a", "8", "-b", "7", "-c", "6", "--beta", "3", "--gamma", "2"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["covered"] is False
    assert record["D"] == 15
    assert set(record["flags"]) == {
        "thm37",
        "thm38",
        "cor313a",
        "cor313b",
        "small2",
        "small3",
        "small4",
        "small5",
    }
    assert not any(record["flags"].values())


def test_invalid_params_exit_three(capsys):
    code, _, err = run(
        ["wlp", "-a", "3", "-b", "2", "-c", "4", "--beta", "1", "--gamma", "1"],
        capsys,
    )
    assert code == 3
    assert "a >= c >= 2" in err


def test_missing_argument_exit_three(capsys):
    code, _, err = run(["wlp", "-a", "2", "-b", "2", "-c", "2"], capsys)
    assert code == 3
    assert "error:" in err


def test_unknown_command_exit_three(capsys):
    code, _, err = run(["frobnicate"], capsys)
    assert code == 3


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()


def test_forced_failure_exit_two(capsys, monkeypatch):
    def fake_check_wlp(self, strategy=None):
        return WlpReport(FAILS_PROBABLY, None, (), {})

    monkeypatch.setattr(GradedQuotient, "check_wlp", fake_check_wlp)
    # (8,7,6,3,2) is uncovered, so a failure is a finding, not a bug
    code, out, _ = run(
        ["wlp", "-a", "8", "-b", "7", "-c", "6", "--beta", "3", "--gamma", "2"],
        capsys,
    )
    assert code == 2
    assert json.loads(out)["verdict"] == FAILS_PROBABLY


def test_covered_failure_exit_four(capsys, monkeypatch):
    def fake_check_wlp(self, strategy=None):
        return WlpReport(FAILS_PROBABLY, None, (), {})

    monkeypatch.setattr(GradedQuotient, "check_wlp", fake_check_wlp)
    code, _, err = run(
        ["wlp", "-a", "2", "-b", "2", "-c", "2", "--beta", "1", "--gamma", "1"],
        capsys,
    )
    assert code == 4
    assert "INTERNAL ERROR" in err


def _strip_ms(records):
    return [{k: v for k, v in r.items() if k != "ms"} for r in records]


def test_sweep_json_deterministic(capsys):
    code, out1, _ = run(["sweep", "--a-max", "3"], capsys)
    assert code == 0
    code, out2, _ = run(["sweep", "--a-max", "3"], capsys)
    assert code == 0
    first, second = json_lines(out1), json_lines(out2)
    assert len(first) == 12
    assert _strip_ms(first) == _strip_ms(second)
    tuples = [(r["a"], r["b"], r["c"], r["beta"], r["gamma"]) for r in first]
    assert tuples == [p.as_tuple() for p in family.enumerate_params(3)]
    assert all(r["verdict"] == "HOLDS" for r in first)


def test_sweep_csv_shape(capsys):
    code, out, _ = run(["sweep", "--a-max", "3", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == list(cli.CSV_COLUMNS)
    assert len(rows) == 13
    header = rows[0]
    first = dict(zip(header, rows[1]))
    assert first["h"] == "1 3 1"
    assert first["covered"] == "true"
    assert "thm37" in first["flags"].split(";")


def test_sweep_slp_adds_column(capsys):
    code, out, _ = run(
        ["sweep", "--a-max", "2", "--slp", "--format", "csv"], capsys
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][-1] == "slp_verdict"
    assert rows[1][-1] == "HOLDS"


def test_sweep_filter_uncovered(capsys):
    code, out, _ = run(["sweep", "--a-max", "6", "--filter", "uncovered"], capsys)
    assert code == 0
    records = json_lines(out)
    expected = [p.as_tuple() for p in family.uncovered_params(6)]
    assert [(r["a"], r["b"], r["c"], r["beta"], r["gamma"]) for r in records] == expected
    assert all(not r["covered"] for r in records)
    assert all(r["verdict"] == "HOLDS" for r in records)


def test_sweep_cache_resume_recomputes_nothing(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "sweep.jsonl"
    code, out1, _ = run(["sweep", "--a-max", "3", "--cache", str(cache)], capsys)
    assert code == 0
    assert cache.exists()

    def boom(job):
        raise AssertionError("resume must not recompute records")

    monkeypatch.setattr(cli, "_compute_record", boom)
    code, out2, _ = run(["sweep", "--a-max", "3", "--cache", str(cache)], capsys)
    assert code == 0
    assert out1 == out2  # byte-identical, timing column included


def test_sweep_cache_ignores_other_strategies(capsys, tmp_path):
    cache = tmp_path / "sweep.jsonl"
    run(["sweep", "--a-max", "2", "--cache", str(cache), "--seed", "1"], capsys)
    code, out, _ = run(
        ["sweep", "--a-max", "2", "--cache", str(cache), "--seed", "2"], capsys
    )
    assert code == 0
    # both strategies now cached separately
    lines = cache.read_text().splitlines()
    assert len(lines) == 2


def test_sweep_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    code, _, _ = run(["sweep", "--a-max", "2"], capsys)
    assert code == 0
    files = list(tmp_path.glob("sweep-*.jsonl"))
    assert len(files) == 1
    assert "a2-2-all" in files[0].name


def test_sweep_out_file(capsys, tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = run(
        ["sweep", "--a-max", "2", "--format", "csv", "--out", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    rows = target.read_text().splitlines()
    assert rows[0] == ",".join(cli.CSV_COLUMNS)
    assert len(rows) == 2


def test_sweep_parallel_matches_serial(capsys):
    code, serial, _ = run(["sweep", "--a-max", "3"], capsys)
    assert code == 0
    code, parallel, _ = run(["sweep", "--a-max", "3", "--jobs", "2"], capsys)
    assert code == 0
    assert _strip_ms(json_lines(serial)) == _strip_ms(json_lines(parallel))


def test_apery_report(capsys):
    code, out, _ = run(["apery", "5,6,7,8"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["apery"] == [0, 6, 7, 8, 14]
    assert record["m_pure_symmetric"] is True
    assert record["order_histogram"] == [1, 3, 1]
    code, out, _ = run(["apery", "4,5,6,7"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["m_pure_symmetric"] is False
    assert [2, "sum"] in record["failures"]


def test_apery_bad_input_exit_three(capsys):
    code, _, err = run(["apery", "4,6"], capsys)
    assert code == 3
    assert "gcd" in err
    code, _, _ = run(["apery", "five,six"], capsys)
    assert code == 3


def test_lemma_deterministic_and_clean(capsys):
    argv = ["lemma", "--n", "5", "--trials", "40", "--seed", "7"]
    code, out1, _ = run(argv, capsys)
    assert code == 0
    record = json.loads(out1)
    assert record["checked"] == 40
    assert record["all_equal"] and record["all_positive"]
    assert record["counterexamples"] == []
    code, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_lemma_bad_size_exit_three(capsys):
    code, _, _ = run(["lemma", "--n", "1"], capsys)
    assert code == 3


def test_hilbert_family_and_ci(capsys):
    code, out, _ = run(
        ["hilbert", "-a", "2", "-b", "2", "-c", "2", "--beta", "1", "--gamma", "1"],
        capsys,
    )
    assert code == 0
    assert json.loads(out) == {"h": [1, 3, 1], "socle_degree": 2}
    code, out, _ = run(
        ["hilbert", "-a", "3", "-b", "3", "-c", "2", "--gamma", "1"], capsys
    )
    assert code == 0
    assert json.loads(out) == {"h": [1, 3, 5, 5, 3, 1], "socle_degree": 5}


def test_hilbert_adhoc_ideal_and_csv(capsys):
    code, out, _ = run(["hilbert", "--ideal", "x^3, y^3, z^3, x*y*z"], capsys)
    assert code == 0
    assert json.loads(out) == {"h": [1, 3, 6, 6, 3], "socle_degree": 4}
    code, out, _ = run(
        ["hilbert", "--ideal", "x^2, y^2, z^2", "--format", "csv"], capsys
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["d", "h"], ["0", "1"], ["1", "3"], ["2", "3"], ["3", "1"]]


def test_hilbert_dmax_table(capsys):
    code, out, _ = run(
        ["hilbert", "--ideal", "x^2", "--dmax", "4"], capsys
    )
    assert code == 0
    assert json.loads(out) == {"h": [1, 3, 5, 7, 9], "socle_degree": None}


def test_hilbert_parse_error_exit_three(capsys):
    code, _, err = run(["hilbert", "--ideal", "x^2, y^#"], capsys)
    assert code == 3
    assert "position" in err


def test_hilbert_not_artinian_exit_three(capsys):
    code, _, err = run(["hilbert", "--ideal", "x^2", "--cap", "6"], capsys)
    assert code == 3
    assert "cap" in err


def test_hilbert_needs_some_input(capsys):
    code, _, err = run(["hilbert"], capsys)
    assert code == 3
    assert "--ideal" in err
