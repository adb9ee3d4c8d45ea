import io
import json
import math
from pathlib import Path

import pytest

from cavitydress.cli import build_parser, run
from cavitydress.sweep import read_points_csv

GOLDEN_DIR = Path(__file__).parent / "golden"


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_closed_autler_townes_pair():
    code, out, _ = invoke(
        ["closed", "--atoms", "1", "--photons", "4", "--coupling", "1", "--corr", "0.9"]
    )
    assert code == 0
    header, row = out.splitlines()
    cells = dict(zip(header.split(","), row.split(",")))
    assert float(cells["e_plus"]) == 2.0
    assert float(cells["e_minus"]) == -2.0
    assert float(cells["per_atom"]) == 4.0
    assert cells["asym_upper"] == ""  # N = 1 has no N^2 regime


def test_closed_reports_asymptotics():
    code, out, _ = invoke(
        ["closed", "-N", "100", "-n", "1", "-g", "1", "-c", "0.1", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["asym_upper"] == 1000.0
    assert payload["asym_lower"] == -10.0
    assert payload["step_upper_asym"] == 20.0
    assert payload["step_lower_asym"] == 0.001


def test_eig_symmetric_fixture():
    code, out, _ = invoke(
        ["eig", "--atoms", "2", "--block", "2", "--coupling", "1",
         "--corr", "0.3", "--space", "symmetric"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,eigenvalue"
    values = [float(line.split(",")[1]) for line in lines[1:]]
    expected = (-2.304078238361605292, 0.0, 2.604078238361605292)
    assert all(abs(v - e) <= 2e-5 for v, e in zip(values, expected))


def test_eig_with_vectors_json():
    code, out, _ = invoke(
        ["eig", "-N", "1", "-M", "1", "--space", "full", "--vectors",
         "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalues"] == [-1.0, 1.0]
    assert payload["max_residual"] <= 1e-14
    assert len(payload["eigenvectors"]) == 2
    norm = math.hypot(*payload["eigenvectors"][0])
    assert abs(norm - 1.0) <= 1e-14


def test_fig1_csv_staircase(tmp_path):
    out_path = tmp_path / "fig1.csv"
    code, _, err = invoke(["fig", "1", "--out", str(out_path)])
    assert code == 0
    assert f"wrote {out_path}" in err
    points = read_points_csv(out_path.read_text())
    assert [row[1] for row in points] == [float(n) for n in range(1, 41)]


def test_fig_multi_series_files(tmp_path):
    out_path = tmp_path / "fig3.csv"
    code, _, _ = invoke(["fig", "3", "--out", str(out_path), "--quiet"])
    assert code == 0
    assert (tmp_path / "fig3_poscorr.csv").exists()
    assert (tmp_path / "fig3_nocorr.csv").exists()
    assert not out_path.exists()


def test_fig_stdout_multi_series_blocks():
    code, out, _ = invoke(["fig", "5", "--n-to", "3"])
    assert code == 0
    blocks = out.split("\n\n")
    assert len(blocks) == 2
    pos = read_points_csv(blocks[0])
    neg = read_points_csv(blocks[1])
    assert all(rn[1] == -rp[2] for rp, rn in zip(pos, neg))


def test_format_json_and_csv_agree(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    json_path = tmp_path / "sweep.json"
    base = ["sweep", "-n", "1", "-g", "1", "-c", "0.1",
            "--n-from", "1", "--n-to", "25", "--quiet"]
    assert invoke(base + ["--out", str(csv_path)])[0] == 0
    assert invoke(base + ["--format", "json", "--out", str(json_path)])[0] == 0
    csv_points = read_points_csv(csv_path.read_text())
    payload = json.loads(json_path.read_text())
    json_points = tuple(tuple(row) for row in payload["points"])
    assert csv_points == json_points  # same binary values, two renderings


def test_verify_subcommand_emits_report():
    code, out, _ = invoke(
        ["verify", "-n", "1", "-g", "1", "-c", "0.2", "--n-from", "1", "--n-to", "10"]
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    first = lines[1].split(",")
    assert first[0] == "1"
    assert float(first[6]) == 0.0 and float(first[7]) == 0.0


def test_dump_triplets():
    code, out, _ = invoke(
        ["dump", "--atoms", "2", "--block", "1", "--coupling", "1", "--corr", "0.5"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "row,col,value"
    triplets = {tuple(line.split(",")) for line in lines[1:]}
    assert triplets == {
        ("0", "1", "1.0"), ("0", "2", "1.0"), ("1", "0", "1.0"), ("2", "0", "1.0")
    }


def test_dump_pair_convention_flag():
    base = ["dump", "-N", "2", "-M", "2", "-g", "0", "-c", "1.0"]
    _, ordered, _ = invoke(base)
    _, unordered, _ = invoke(base + ["--pair-convention", "unordered"])
    vals_o = sorted(float(l.split(",")[2]) for l in ordered.splitlines()[1:])
    vals_u = sorted(float(l.split(",")[2]) for l in unordered.splitlines()[1:])
    assert vals_u == [v / 2 for v in vals_o]


def test_unknown_flag_is_usage_error():
    code, _, err = invoke(["closed", "--atoms", "1", "--photons", "1", "--bogus"])
    assert code == 1
    assert "error" in err


def test_out_of_domain_value_is_usage_error():
    code, _, err = invoke(["closed", "--atoms", "0", "--photons", "1"])
    assert code == 1
    assert "atom" in err


def test_missing_subcommand_is_usage_error():
    code, _, _ = invoke([])
    assert code == 1


def test_unwritable_output_path(tmp_path):
    target = tmp_path / "nosuchdir" / "x.csv"
    code, _, err = invoke(["fig", "1", "--out", str(target)])
    assert code == 1
    assert "x.csv" in err


def test_overflowing_block_is_reported():
    code, _, err = invoke(["eig", "-N", "1000000000", "-M", "1000000000"])
    assert code == 1
    assert "index range" in err


def test_numerical_failure_exit_code(monkeypatch):
    from cavitydress import cli
    from cavitydress.eigensolve import ConvergenceError

    def explode(args, docs):
        raise ConvergenceError("synthetic")

    monkeypatch.setitem(cli._COMMANDS, "eig", explode)
    code, _, err = invoke(["eig", "-N", "1", "-M", "1"])
    assert code == 2
    assert "numerical failure" in err


def test_determinism_fig_outputs(tmp_path):
    for fig_id in range(1, 7):
        runs = []
        for tag, workers in (("a", "1"), ("b", "1"), ("c", "4")):
            directory = tmp_path / f"{fig_id}{tag}"
            directory.mkdir()
            out = directory / f"fig{fig_id}.csv"
            code, _, _ = invoke(
                ["fig", str(fig_id), "--out", str(out), "--quiet",
                 "--workers", workers]
            )
            assert code == 0
            runs.append(
                {p.name: p.read_bytes() for p in sorted(directory.iterdir())}
            )
        assert runs[0] == runs[1] == runs[2]


def test_help_lists_every_flag_golden():
    parser = build_parser()
    assert parser.format_help() == (GOLDEN_DIR / "help_main.txt").read_text()


@pytest.mark.parametrize(
    "command", ["eig", "closed", "sweep", "fig", "verify", "dump"]
)
def test_subcommand_help_golden(command):
    out, err = io.StringIO(), io.StringIO()
    code = run([command, "--help"], stdout=out, stderr=err)
    assert code == 0
    assert out.getvalue() == (GOLDEN_DIR / f"help_{command}.txt").read_text()
