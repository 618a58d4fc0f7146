"""Tests for the command line surface: formats, exit codes, golden rows."""

import dataclasses
import json

import pytest

from antipodal_atlas import antipodal, cli, roots


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def cells(line):
    return [part.strip() for part in line.split("|")]


class TestReportDocuments:
    @pytest.mark.parametrize("name,kwargs", [
        ("E VIII", {}),
        ("Spin(16)", {}),
        ("Gr_{r,r+q}(C)", {"r": 4, "q": 3}),
        ("Sp(r)/U(r)", {"r": 5, "gamma_label": "Z_2"}),
    ])
    def test_json_round_trip(self, name, kwargs):
        gamma_label = kwargs.pop("gamma_label", None)
        space, bound = antipodal.resolve_space(name, kwargs.get("r"),
                                               kwargs.get("q"), gamma_label)
        report = antipodal.antipodal_report(space, bound, kwargs.get("q"),
                                            gamma_label)
        doc = cli.report_document(report)
        assert json.loads(json.dumps(doc)) == doc
        assert doc["schema_version"] == 1

    def test_tie_rows_survive_serialization(self):
        space, bound = antipodal.resolve_space("Spin(16)")
        doc = cli.report_document(antipodal.antipodal_report(space, bound))
        assert [o["dimension"] for o in doc["orbits"]] == [0, 64]
        assert [t["dimension"] for t in doc["unlisted_ties"]] == [56]


class TestListCommand:
    def test_exits_clean(self, capsys):
        code, out, _ = run_cli(["list"], capsys)
        assert code == 0
        assert "E VIII" in out

    def test_csv_header(self, capsys):
        _, out, _ = run_cli(["list", "--format", "csv"], capsys)
        assert out.splitlines()[0] == "name,cartan_label,sigma,rank_expr,gammas"

    def test_json_lists_every_space(self, capsys):
        _, out, _ = run_cli(["list", "--format", "json"], capsys)
        rows = json.loads(out)
        assert {"name", "cartan_label", "sigma", "rank_expr", "gammas"} <= rows[0].keys()
        assert any(row["name"] == "G2" for row in rows)


class TestDescribeCommand:
    def test_known_space(self, capsys):
        code, out, _ = run_cli(["describe", "Spin(9)"], capsys)
        assert code == 0
        assert "Spin(9)" in out

    def test_unknown_space(self, capsys):
        code, _, err = run_cli(["describe", "nope"], capsys)
        assert code == 2
        assert "no catalogued space" in err


class TestAntipodalCommand:
    def test_fixed_row_report(self, capsys):
        code, out, _ = run_cli(["antipodal", "E VIII"], capsys)
        assert code == 0
        assert "dimension 64" in out
        assert "status: paper-validated" in out

    def test_tie_line(self, capsys):
        _, out, _ = run_cli(["antipodal", "Spin(16)"], capsys)
        assert "unlisted tie: 1/2 e₁ + 1/2 e₈ (vertex)" in out
        assert "component dimensions: 0, 64" in out

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            ["antipodal", "G2", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert [o["dimension"] for o in doc["orbits"]] == [6]

    def test_missing_r(self, capsys):
        code, _, err = run_cli(["antipodal", "Spin(2r+1)"], capsys)
        assert code == 2
        assert "needs an explicit r" in err

    def test_gamma_on_simply_connected_row(self, capsys):
        code, _, err = run_cli(
            ["antipodal", "Spin(9)", "--gamma", "Z_2"], capsys)
        assert code == 2
        assert "error:" in err

    def test_unvalidated_quotient_is_refused(self, capsys):
        code, _, err = run_cli(
            ["antipodal", "A I", "--r", "7", "--gamma", "Z_4"], capsys)
        assert code == 3
        assert "--allow-unvalidated" in err

    def test_unvalidated_quotient_can_be_forced(self, capsys):
        code, out, _ = run_cli(
            ["antipodal", "A I", "--r", "7", "--gamma", "Z_4",
             "--allow-unvalidated"], capsys)
        assert code == 0
        assert "status: computed-not-validated" in out
        assert "component dimensions: 0, 0, 16, 16" in out


class TestTableCommand:
    def test_table1_g2_row(self, capsys):
        _, out, _ = run_cli(["table", "1"], capsys)
        rows = [cells(line) for line in out.splitlines() if "|" in line]
        assert ["𝔤₂", "e₁", "d₁=3"] in rows

    def test_table1_ascii_row(self, capsys):
        _, out, _ = run_cli(["table", "1", "--ascii"], capsys)
        rows = [cells(line) for line in out.splitlines() if "|" in line]
        assert ["g2", "e_1", "d_1=3"] in rows

    def test_table2_odd_c_row(self, capsys):
        _, out, _ = run_cli(["table", "2"], capsys)
        rows = [cells(line) for line in out.splitlines() if "|" in line]
        assert ["𝔠ᵣ  r odd", "Z₂", "½(e_{(r-1)/2}+e_{(r+1)/2})", "(2,2)"] in rows

    def test_table2_ascii_row(self, capsys):
        _, out, _ = run_cli(["table", "2", "--ascii"], capsys)
        rows = [cells(line) for line in out.splitlines() if "|" in line]
        assert ["c_r  r odd", "Z_2", "1/2(e_{(r-1)/2}+e_{(r+1)/2})", "(2,2)"] in rows

    @pytest.mark.parametrize("number,header", [
        (1, "sigma,max_corners,factors"),
        (2, "sigma,gamma,max_outer,psi_factors"),
        (3, "type,space,sigma,max_corners,dimensions"),
        (4, "type,space,sigma,gamma,dimensions"),
        (5, "group,sigma,max_corners,dimensions"),
        (6, "group,sigma,gamma,dimensions"),
    ])
    def test_csv_headers(self, number, header, capsys):
        code, out, _ = run_cli(
            ["table", str(number), "--format", "csv"], capsys)
        assert code == 0
        assert out.splitlines()[0] == header

    def test_json_table_parses(self, capsys):
        _, out, _ = run_cli(["table", "5", "--format", "json"], capsys)
        rows = json.loads(out)
        assert any(row["group"] == "E8" and row["dimensions"] == "128"
                   for row in rows)

    def test_evaluate_instantiates_rows(self, capsys):
        code, out, _ = run_cli(["table", "4", "--evaluate", "r=3"], capsys)
        assert code == 0
        line = next(l for l in out.splitlines() if "C II" in l)
        row = cells(line)
        assert row[3] == "Z₂"
        assert row[-1] == "27"

    def test_bad_evaluate_point(self, capsys):
        code, _, err = run_cli(["table", "3", "--evaluate", "bogus"], capsys)
        assert code == 2
        assert "cannot parse" in err


class TestVerifyCommand:
    def test_clean_run(self, capsys):
        code, out, _ = run_cli(["verify"], capsys)
        assert code == 0
        assert "FAIL" not in out
        assert "checked" in out

    def test_a_corrupted_build_fails_table1(self, capsys, monkeypatch):
        true_build = roots.build

        def corrupted(family, rank=None):
            rs = true_build(family, rank)
            if rs.family == "g2":
                return dataclasses.replace(rs, d=(3, 1))
            return rs

        monkeypatch.setattr(roots, "build", corrupted)
        code, out, _ = run_cli(["verify"], capsys)
        assert code == 1
        assert "FAIL Table 1 / g2" in out
