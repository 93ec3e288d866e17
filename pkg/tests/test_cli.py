import json
from importlib import resources

import pytest

from symdet.cli import main, parse_partition
from symdet.combinat import Partition


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestPartitionParsing:
    def test_comma_separated(self):
        assert parse_partition("3,1,1") == Partition((3, 1, 1))

    def test_caret_expansion(self):
        assert parse_partition("3,1^2") == Partition((3, 1, 1))
        assert parse_partition("2^3") == Partition((2, 2, 2))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            parse_partition("0")

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            parse_partition("1,2")

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_partition("a,b")


class TestSymCommand:
    def test_text_contains_reduced_class(self, capsys):
        code, out = run(capsys, "--jobs", "1", "sym", "2,1")
        assert code == 0
        assert "c = 3^C(N,3)" in out

    def test_json_fields(self, capsys):
        code, out = run(capsys, "--jobs", "1", "--format", "json", "sym", "1,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["dimension"]["display"] == "N*(N-1)/2"
        assert payload["c_reduced"]["display"] == "2^C(N,2)"

    def test_json_roundtrip_idempotent(self, capsys):
        _, out = run(capsys, "--jobs", "1", "--format", "json", "sym", "2,2")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload, indent=2)) == payload

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sym", "0"])
        assert exc.value.code == 2

    def test_single_box_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["sym", "1"])
        assert exc.value.code == 2

    def test_latex(self, capsys):
        code, out = run(capsys, "--jobs", "1", "--format", "latex", "sym", "2,1")
        assert code == 0
        assert out.startswith("\\begin{tabular}")
        assert "\\binom{N}{3}" in out


class TestTableCommand:
    def test_row_counts(self, capsys):
        _, out = run(capsys, "--jobs", "1", "table", "--n", "3")
        assert len(out.strip().splitlines()) == 5

    def test_full_depth_row_count(self, capsys):
        _, out = run(capsys, "--jobs", "1", "table", "--n", "7")
        assert len(out.strip().splitlines()) == 43

    def test_latex_structure(self, capsys):
        _, out = run(capsys, "--jobs", "1", "--format", "latex", "table", "--n", "2")
        lines = out.strip().splitlines()
        assert lines[0] == "\\begin{tabular}{|cccc|}"
        assert lines[-1] == "\\end{tabular}"
        assert sum(1 for line in lines if line.startswith("2 & ")) == 2

    def test_beyond_supported_degree(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--n", "10"])
        assert exc.value.code == 2


class TestRefinedCommand:
    def test_text_two_one(self, capsys):
        code, out = run(capsys, "refined", "2,1")
        assert code == 0
        assert "gamma (1)  m=1  c = 2*(N-1)" in out

    def test_text_four_two_has_multiplicity_two(self, capsys):
        code, out = run(capsys, "refined", "4,2")
        assert code == 0
        assert "m=2" in out
        assert "5*N*(N-2)*(N+1)*(N+4)" in out

    def test_exterior_has_no_constituents(self, capsys):
        code, out = run(capsys, "refined", "1,1,1")
        assert code == 0
        assert "no constituents" in out

    def test_unsupported_weight(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["refined", "8"])
        assert exc.value.code == 2

    def test_json_shape(self, capsys):
        _, out = run(capsys, "--format", "json", "refined", "3,1")
        payload = json.loads(out)
        gammas = [tuple(c["gamma"]) for c in payload["constituents"]]
        assert gammas == [(2,), (1, 1)]


class TestVerifyCommand:
    def test_sym_scope_passes(self, capsys):
        code, out = run(capsys, "--jobs", "1", "verify", "--scope", "sym")
        assert code == 0
        assert "sym:" in out and "[OK]" in out

    def test_corrupted_golden_fails(self, capsys, tmp_path):
        text = resources.files("symdet.data").joinpath("golden.json").read_text()
        doc = json.loads(text)
        doc["symmetrizations"][3]["det_class"] = [[7, [3]]]
        bad = tmp_path / "golden.json"
        bad.write_text(json.dumps(doc))
        code, out = run(
            capsys, "--jobs", "1", "verify", "--scope", "sym", "--golden", str(bad)
        )
        assert code == 1
        assert "mismatch" in out
        assert out.count("mismatch:") == 1


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        _, first = run(capsys, "--jobs", "1", "--format", "json", "sym", "3,1")
        _, second = run(capsys, "--jobs", "1", "--format", "json", "sym", "3,1")
        assert first == second

    def test_jobs_do_not_change_output(self, capsys):
        _, serial = run(capsys, "--jobs", "1", "sym", "2,2")
        _, parallel = run(capsys, "--jobs", "2", "sym", "2,2")
        assert serial == parallel
