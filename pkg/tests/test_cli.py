"""The command-line frontend: parsing, exit codes, report golden checks."""

import os

import pytest

from quandles.cli import CLIError, main, parse_input
from quandles.core import dump_table
from quandles import families


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParseInput:
    def test_family_with_keys(self):
        parsed = parse_input(["alexander", "orders=3,3", "t=-1"])
        assert parsed.alexander_spec is not None
        assert parsed.alexander_spec.size == 9

    def test_family_positional(self):
        parsed = parse_input(["alexander", "3", "t=-1"])
        assert parsed.alexander_spec.size == 3

    def test_single_quoted_string(self):
        parsed = parse_input(["dihedral n=5"])
        assert parsed.build().order == 5

    def test_matrix_t(self):
        parsed = parse_input(["alexander", "orders=2,2", "t=0,1;1,1"])
        assert parsed.alexander_spec.t_order() == 3

    def test_grid_key(self):
        parsed = parse_input(["grid:trivial:2"])
        assert parsed.build().order == 2

    def test_errors(self):
        for bad in (
            ["alexander", "orders=3"],  # missing t
            ["alexander", "orders=3", "t=1", "x=2"],  # unknown key
            ["spherical", "n=2", "q=4"],  # even characteristic
            ["core", "group=monster"],
            ["grid:nope"],
            ["no_such_family", "n=1"],
            [],
        ):
            with pytest.raises(CLIError):
                parse_input(bad)


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, out, _ = run(capsys, "check", "dihedral", "n=3")
        assert code == 0
        assert "result: pass" in out

    def test_axiom_failure_is_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.quandle"
        bad.write_text("3\n0 1 2\n1 1 1\n2 2 2\n")
        code, out, _ = run(capsys, "check", str(bad))
        assert code == 1
        assert "result: fail" in out
        assert "data.axiom: ii" in out

    def test_parse_error_is_two(self, capsys):
        code, _, err = run(capsys, "check", "alexander", "orders=6", "t=2")
        assert code == 2
        assert "error:" in err

    def test_precondition_error_is_two(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "clauwens", "alexander", "4", "t=-1")
        assert code == 2
        assert "not connected" in err


class TestCommands:
    def test_homology_quandle(self, capsys):
        code, out, _ = run(capsys, "homology", "dihedral", "n=3")
        assert code == 0
        assert "data.group: 0" in out

    def test_homology_rack_mode(self, capsys):
        code, out, _ = run(capsys, "homology", "--mode", "rack", "trivial", "n=2")
        assert code == 0
        assert "data.group: Z^4" in out

    def test_homology_cap_skips(self, capsys):
        code, out, _ = run(
            capsys, "homology", "--cap-cells", "10", "dihedral", "n=8"
        )
        assert code == 0
        assert "status: skipped" in out

    def test_invariants(self, capsys):
        code, out, _ = run(capsys, "invariants", "alexander", "orders=5", "t=2")
        assert code == 0
        assert "data.t_order: 4" in out
        assert "abelianized adjoint group" in out

    def test_adjoint(self, capsys):
        code, out, _ = run(capsys, "adjoint", "alexander", "orders=2,2", "t=0,1;1,1")
        assert code == 0
        assert "data.coker: Z/2" in out

    def test_verify_homotopy(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "homotopy", "alexander", "3", "t=-1")
        assert code == 0
        assert out.count("status: pass") == 2

    def test_verify_eisermann(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "eisermann", "alexander", "orders=3,3", "t=-1"
        )
        assert code == 0
        assert "data.chain: Z/3" in out

    def test_verify_coxeter_group_name(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "coxeter", "s3")
        assert code == 0
        assert "data.h2: 0" in out

    def test_verify_coxeter_label(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "coxeter", "B2")
        assert code == 0
        assert "status: pass" in out

    def test_covering_with_export(self, capsys, tmp_path):
        exp = tmp_path / "exported"
        code, out, _ = run(
            capsys,
            "covering",
            "alexander",
            "orders=3,3",
            "t=-1",
            "--export-dir",
            str(exp),
        )
        assert code == 0
        assert (exp / "total.quandle").exists()
        assert "data.total_order: 27" in out

    def test_check_on_file(self, capsys, tmp_path):
        p = tmp_path / "r5.quandle"
        p.write_text(dump_table(families.dihedral(5)))
        code, out, _ = run(capsys, "check", str(p))
        assert code == 0
        assert "data.order: 5" in out

    def test_report_to_file(self, tmp_path, capsys):
        target = tmp_path / "report.txt"
        code = main(["check", "trivial", "n=1", "--out", str(target)])
        capsys.readouterr()
        assert code == 0
        assert "result: pass" in target.read_text()


class TestCensus:
    def test_grid_census_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "census")
        code2, out2, _ = run(capsys, "census")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "checks: " in out1

    def test_parallel_matches_serial(self, capsys):
        code1, serial, _ = run(capsys, "census")
        code2, parallel, _ = run(capsys, "census", "--jobs", "2")
        assert code1 == code2 == 0
        assert serial == parallel

    def test_directory_census(self, capsys, tmp_path):
        (tmp_path / "a.quandle").write_text(dump_table(families.dihedral(3)))
        (tmp_path / "b.quandle").write_text(dump_table(families.trivial(2)))
        code, out, _ = run(capsys, "census", "--dir", str(tmp_path))
        assert code == 0
        assert "[a.quandle]" in out and "[b.quandle]" in out

    def test_empty_directory_is_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "census", "--dir", str(tmp_path))
        assert code == 2
        assert "error:" in err
