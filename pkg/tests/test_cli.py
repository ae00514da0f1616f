import json

from titrees.cli import main
from titrees.sparse6 import decode_line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExtremal:
    def test_order_11_line(self, capsys):
        code, out, _ = run(capsys, "extremal", "--order", "11")
        assert code == 0
        assert out.splitlines()[0] == "odd-iii C(9; 5,7) W=186 TI=yes"

    def test_unresolved_is_exit_zero(self, capsys):
        code, out, _ = run(capsys, "extremal", "--order", "30")
        assert code == 0
        assert out.startswith("unresolved") and "8n - 15" in out

    def test_no_ti_tree(self, capsys):
        code, out, _ = run(capsys, "extremal", "--order", "5")
        assert code == 0 and out.startswith("no-ti-tree")

    def test_emit_sparse6(self, capsys):
        code, out, _ = run(capsys, "extremal", "--order", "16", "--emit", "sparse6")
        line = out.splitlines()[1]
        assert decode_line(line).n == 16

    def test_json_verdict_field(self, capsys):
        code, out, _ = run(capsys, "extremal", "--order", "30", "--json")
        doc = json.loads(out)
        assert doc["verdict"] == "unresolved" and doc["order"] == 30

    def test_json_solved(self, capsys):
        _, out, _ = run(capsys, "extremal", "--order", "14", "--json")
        doc = json.loads(out)
        assert doc["spec"] == "CV(9; 3:1,5:1,5:3)" and doc["direct_wiener"] == 328


class TestConstructAndInvariants:
    def test_construct(self, capsys):
        code, out, _ = run(capsys, "construct", "S(3,2,1)", "--emit", "sparse6")
        assert code == 0
        assert decode_line(out.splitlines()[1]).n == 7

    def test_construct_json(self, capsys):
        _, out, _ = run(capsys, "construct", "C(9; 5,7)", "--json")
        doc = json.loads(out)
        assert doc["order"] == 11 and doc["labels"]["v5"] == 4

    def test_invariants_spec_text(self, capsys):
        code, out, _ = run(capsys, "invariants", "S(3,2,1)")
        assert code == 0 and "W=50 TI=yes" in out

    def test_invariants_sparse6_input(self, capsys):
        _, out, _ = run(capsys, "construct", "P(4)", "--emit", "sparse6")
        line = out.splitlines()[1]
        code, out, _ = run(capsys, "invariants", line)
        assert code == 0 and "W=10 TI=no" in out

    def test_parse_error_exit(self, capsys):
        code, _, err = run(capsys, "construct", "S(1,2")
        assert code == 1 and "error:" in err


class TestFormula:
    def test_closed_form_and_offsets(self, capsys):
        code, out, _ = run(capsys, "formula", "--name", "odd-case-iii", "--n", "11")
        assert code == 0
        assert "W = 186" in out and "offsets" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "formula", "--name", "even-case-ii", "--n", "16", "--json")
        doc = json.loads(out)
        assert doc["wiener"] == 556 and doc["distinct"] is True
        assert doc["params"]["k"] == 3

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "formula", "--name", "nope", "--n", "5")
        assert code == 2 and "known:" in err

    def test_precondition_error(self, capsys):
        code, _, err = run(capsys, "formula", "--name", "odd-case-iii", "--n", "13")
        assert code == 1 and "error:" in err


class TestEnumerate:
    def test_stream_to_file(self, capsys, tmp_path):
        out_file = tmp_path / "trees7.s6"
        code, _, _ = run(capsys, "enumerate", "--order", "7", "--out", str(out_file))
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert len(lines) == 11
        assert all(decode_line(x).n == 7 for x in lines)

    def test_ti_only(self, capsys, tmp_path):
        out_file = tmp_path / "ti13.s6"
        code, _, _ = run(capsys, "enumerate", "--order", "13", "--ti-only",
                         "--shards", "2", "--out", str(out_file))
        assert code == 0
        assert len(out_file.read_text().splitlines()) == 24

    def test_cap_error(self, capsys):
        code, _, err = run(capsys, "enumerate", "--order", "40")
        assert code == 1 and "cap" in err


class TestSearchMaxAndVerify:
    def test_search_max_text(self, capsys):
        code, out, _ = run(capsys, "search-max", "--order", "11")
        assert code == 0
        assert "total=235" in out and "maxW=186" in out

    def test_search_max_json_stable(self, capsys):
        _, out1, _ = run(capsys, "search-max", "--order", "11", "--json")
        _, out2, _ = run(capsys, "search-max", "--order", "11", "--json")
        assert out1 == out2
        assert json.loads(out1)["max_wiener"] == 186

    def test_verify_range_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--orders", "2..9")
        assert code == 0 and "verify: PASS" in out

    def test_verify_report_file(self, capsys, tmp_path):
        report = tmp_path / "report.json"
        code, _, _ = run(capsys, "verify", "--orders", "7,11", "--report", str(report))
        assert code == 0
        doc = json.loads(report.read_text())
        assert doc["ok"] is True and len(doc["rows"]) == 2

    def test_orders_syntax(self, capsys):
        code, out, _ = run(capsys, "verify", "--orders", "2..4,7")
        assert code == 0
        assert out.count("\n") == 5  # four rows plus the PASS line
