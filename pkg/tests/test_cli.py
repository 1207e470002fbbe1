import subprocess
import sys

import pytest

from ubtrees import cli, format_tree, parse_signature, path_tree


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestUb:
    def test_star_breakdown(self, capsys):
        code, out, _ = run_cli(capsys, "ub", "--star", "2,1,1")
        assert code == 0
        assert "ub1=9 ub2=2 ub3=3 ub4=2" in out
        assert "uB: 16" in out
        assert "order: 5" in out

    def test_star_k13(self, capsys):
        code, out, _ = run_cli(capsys, "ub", "--star", "1,1,1")
        assert code == 0
        assert "uB: 6" in out

    def test_tree_file(self, capsys, tmp_path):
        f = tmp_path / "p3.tree"
        f.write_text(format_tree(path_tree(3)))
        code, out, _ = run_cli(capsys, "ub", str(f))
        assert code == 0
        assert "uB: 2" in out
        assert "mostar: 2" in out

    def test_invalid_signature_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "ub", "--star", "2,0")
        assert code == 1
        assert "error" in err

    def test_bad_file_exits_one(self, capsys, tmp_path):
        f = tmp_path / "bad.tree"
        f.write_text("3\n0 1\n")
        code, _, err = run_cli(capsys, "ub", str(f))
        assert code == 1


class TestSearch:
    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--from", "5", "--to", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,max_ub,witnesses"
        assert lines[1] == '5,16,"2,1,1"'
        assert lines[2] == '6,32,"2,2,1"'

    def test_witnesses_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "search", "--from", "10", "--to", "10")
        field = out.splitlines()[1].split(",", 2)[2].strip('"')
        sigs = [parse_signature(w) for w in field.split(";")]
        assert all(s.order == 10 for s in sigs)
        assert len(sigs) == 3

    def test_markdown_format(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--from", "16", "--to", "16",
                               "--format", "md")
        assert code == 0
        assert out.strip() == "| 16 | 1006 | (4,3,3,2,2,1) |"

    def test_byte_identical_runs(self, capsys):
        _, out1, _ = run_cli(capsys, "search", "--from", "5", "--to", "9")
        _, out2, _ = run_cli(capsys, "search", "--from", "5", "--to", "9",
                             "--threads", "2")
        assert out1 == out2

    def test_all_trees_reports_dominance(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--from", "5", "--to", "5",
                               "--all-trees")
        assert code == 0
        assert out.splitlines()[1] == '5,16,"2,1,1",true'

    def test_range_validation(self, capsys):
        assert run_cli(capsys, "search", "--from", "3", "--to", "5")[0] == 1
        assert run_cli(capsys, "search", "--from", "6", "--to", "5")[0] == 1
        assert run_cli(capsys, "search", "--from", "5", "--to", "16",
                       "--all-trees")[0] == 1


class TestRelax:
    def test_eval(self, capsys):
        code, out, _ = run_cli(capsys, "relax", "eval", "0.5,0.5")
        assert code == 0
        assert "f_closed: 0.166666666667" in out
        assert "f_quadrature: 0.166666666667" in out

    def test_max(self, capsys):
        code, out, _ = run_cli(capsys, "relax", "max", "3")
        assert code == 0
        assert "value: 0.259259259259" in out
        assert "0.333333333" in out

    def test_bound_check(self, capsys):
        code, out, _ = run_cli(capsys, "relax", "bound-check", "--to", "10")
        assert code == 0
        assert "max ratio:" in out
        worst = float(out.splitlines()[-1].split()[-1])
        assert worst <= 1.0

    def test_eval_rejects_bad_vector(self, capsys):
        assert run_cli(capsys, "relax", "eval", "0.9,0.9")[0] == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ubtrees.cli", "ub", "--star", "2,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "uB: 16" in proc.stdout
