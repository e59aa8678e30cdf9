import csv
import io
import json

import pytest

from arczeta import cli
from arczeta.selfcheck import SuiteResult
from arczeta.zeta import zeta_from_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNormalize:
    def test_reorders_and_renames(self, capsys):
        code, out, _ = run(capsys, "normalize", "-2*x1^3 + x2^2 - x3^2")
        assert code == 0 and out.strip() == "x1^2 - x2^2 - x3^3"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "normalize", "x1^2")
        assert code == 0 and out.strip() == "x1^2"

    def test_repeated_variable_is_an_error(self, capsys):
        code, _, err = run(capsys, "normalize", "x1^2 + x1^3")
        assert code == 2 and "repeated" in err


class TestClassify:
    def test_not_equivalent_exits_one(self, capsys):
        code, out, _ = run(
            capsys, "classify", "x1^2+x2^4+x3^4", "--", "-x1^2-x2^4-x3^4"
        )
        assert code == 1
        assert "sign mismatch at exponent 2" in out

    def test_equivalent_exits_zero(self, capsys):
        code, out, _ = run(capsys, "classify", "x1^3+x2^6", "x1^3-x2^6")
        assert code == 0 and "equivalent" in out

    def test_exponent_mismatch(self, capsys):
        code, out, _ = run(capsys, "classify", "x1^2", "x1^4")
        assert code == 1 and "exponent mismatch" in out

    def test_parse_error_exits_two(self, capsys):
        code, _, err = run(capsys, "classify", "x1^2", "y^2")
        assert code == 2 and "error" in err

    def test_dimension_error_exits_two(self, capsys):
        code, _, err = run(capsys, "classify", "x1^2", "x1^2+x2^2")
        assert code == 2 and "dimension" in err

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--format", "json", "x1^2", "x1^2"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["equivalent"] is True
        assert payload["reason"] == "all-conditions-met"


class TestFiber:
    def test_crossing_lines(self, capsys):
        code, out, _ = run(capsys, "fiber", "x1^4-x2^4", "0")
        assert code == 0
        assert "2*u - 1" in out and "chi_c = -3" in out

    def test_empty_fiber(self, capsys):
        code, out, _ = run(capsys, "fiber", "x1^2+x2^2", "-1")
        assert code == 0
        assert "= 0" in out and "chi_c = 0" in out

    def test_odd_shortcut(self, capsys):
        code, out, _ = run(capsys, "fiber", "x1^2+x2^3", "1")
        assert code == 0 and "= u" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "fiber", "--format", "json", "x1^4-x2^4", "0")
        payload = json.loads(out)
        assert payload["beta_text"] == "2*u - 1" and payload["chi_c"] == -3


class TestZeta:
    def test_modified_table(self, capsys):
        code, out, _ = run(capsys, "zeta", "x1^2", "--order", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert "n=1" in lines[1] and "-u + 1" in lines[1]
        assert "n=2" in lines[2] and "f+=u^-1" in lines[2] and "f-=-u^-1" in lines[2]

    def test_plain_table(self, capsys):
        code, out, _ = run(
            capsys, "zeta", "x1^2", "--kind", "plain", "--order", "2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert "bbar=0" in lines[1]
        assert "f+=2*u^-1" in lines[2] and "f-=0" in lines[2]

    def test_nonsingular_all_zero(self, capsys):
        code, out, _ = run(capsys, "zeta", "x1^1+x2^2", "--order", "3")
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            assert "bbar=0" in line and "f+=0" in line and "f-=0" in line

    def test_json_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "zeta", "x1^2-x2^4", "--format", "json", "--order", "8"
        )
        assert code == 0
        z = zeta_from_json(json.loads(out))
        assert z.order == 8 and z.kind == "modified"

    def test_csv(self, capsys):
        code, out, _ = run(
            capsys, "zeta", "x1^2", "--format", "csv", "--order", "2"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "bbar", "fplus", "fminus"]
        assert rows[1] == ["1", "-u + 1", "-1", "-1"]
        assert rows[2] == ["2", "0", "u^-1", "-u^-1"]


class TestRecover:
    def test_plain_report(self, capsys):
        code, out, _ = run(capsys, "recover", "x1^4-x2^4")
        assert code == 0
        assert "k=4" in out and "sigma+=1 sigma-=1" in out
        assert "pi=u - 1" in out and "rho=-1" in out and "branch=negative" in out

    def test_vacuous_report(self, capsys):
        code, out, _ = run(capsys, "recover", "x1^3+x2^9")
        assert code == 0 and "nothing to recover" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "recover", "x1^2+x2^2", "--format", "json")
        payload = json.loads(out)
        assert payload == [
            {
                "k": 2,
                "sigma_plus": 2,
                "sigma_minus": 0,
                "pi": [[1, 1], [0, 1]],
                "rho": [[0, 1]],
                "branch": "positive",
            }
        ]

    def test_nonsingular_exits_two(self, capsys):
        code, _, err = run(capsys, "recover", "x1^1+x2^2")
        assert code == 2 and "nonsingular" in err


class TestTable:
    def test_one_variable_classes(self, capsys):
        code, out, err = run(capsys, "table", "--max-d", "1", "--max-exp", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        reps = [line.split("->")[1].split("K=")[0].strip() for line in lines]
        assert reps == ["x1^2", "-x1^2", "x1^3", "x1^3"]
        assert "2 polynomials" in err or "4 polynomials" in err

    def test_two_variable_quadratic_classes(self, capsys):
        code, out, _ = run(
            capsys, "table", "--max-d", "2", "--max-exp", "2", "--jobs", "1"
        )
        assert code == 0
        two_var = [l for l in out.strip().splitlines() if "x2" in l]
        reps = {line.split("->")[1].split("K=")[0].strip() for line in two_var}
        assert reps == {"x1^2 + x2^2", "x1^2 - x2^2", "-x1^2 - x2^2"}

    def test_json_stream(self, capsys):
        code, out, _ = run(
            capsys, "table", "--max-d", "1", "--max-exp", "2", "--format", "json"
        )
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert len(records) == 2
        assert records[0]["polynomial"] == "x1^2"
        assert records[0]["sign_counts"] == [
            {"k": 2, "sigma_plus": 1, "sigma_minus": 0}
        ]

    def test_csv_stream(self, capsys):
        code, out, _ = run(
            capsys, "table", "--max-d", "1", "--max-exp", "2", "--format", "csv"
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["polynomial", "representative", "relevant", "sign_counts"]
        assert len(rows) == 3

    def test_oversized_bounds_rejected(self, capsys):
        code, _, err = run(capsys, "table", "--max-d", "6", "--max-exp", "40")
        assert code == 2 and "bounds too large" in err


class TestSelfcheck:
    def test_reports_and_exit_codes(self, capsys, monkeypatch):
        healthy = SuiteResult(name="fake suite", checked=3)
        monkeypatch.setattr(cli, "run_all", lambda **kw: [healthy])
        code, out, _ = run(capsys, "selfcheck")
        assert code == 0 and "PASS fake suite" in out and "1/1 suites" in out

        broken = SuiteResult(name="fake suite", checked=3, failures=["boom"])
        monkeypatch.setattr(cli, "run_all", lambda **kw: [healthy, broken])
        code, out, _ = run(capsys, "selfcheck")
        assert code == 1 and "FAIL fake suite" in out and "boom" in out


class TestParserPlumbing:
    def test_unknown_command_rejected(self):
        with pytest.raises(SystemExit):
            cli.build_parser().parse_args(["frobnicate"])

    def test_negative_target_parses(self):
        args = cli.build_parser().parse_args(["fiber", "x1^2", "-1"])
        assert args.target == -1

    def test_config_validation(self):
        with pytest.raises(ValueError):
            cli.Config(order=0)
        with pytest.raises(ValueError):
            cli.Config(fmt="xml")
        with pytest.raises(ValueError):
            cli.Config(jobs=0)
        with pytest.raises(ValueError):
            cli.Config(max_d=0)
