import json

import pytest

from cozero import report as report_mod
from cozero.cli import main
from cozero.report import WienerReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_wiener_plain(capsys):
    code, out, _ = run(capsys, "wiener", "Z(100)")
    assert code == 0
    assert "wiener=2954" in out
    assert "status=value" in out


def test_wiener_json_keeps_value_as_string(capsys):
    code, out, _ = run(capsys, "wiener", "F(289,343)", "--method", "closed", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["wiener"] == "297774"
    assert payload[0]["status"] == "value"


def test_wiener_json_roundtrips_beyond_float_precision(capsys):
    # A value past 2**53 would silently lose digits as a JSON number.
    code, out, _ = run(capsys, "wiener", "F(10007,10009,10037)", "--format", "json")
    assert code == 0
    value = int(json.loads(out)[0]["wiener"])
    assert value > 2**53
    from cozero import wiener_reduced

    assert value == wiener_reduced((10007, 10009, 10037)).wiener


def test_wiener_disconnected_exit_code(capsys):
    code, out, _ = run(capsys, "wiener", "Z(8)")
    assert code == 2
    assert "disconnected" in out


def test_wiener_empty_graph_exit_code(capsys):
    code, out, _ = run(capsys, "wiener", "Z(7)")
    assert code == 0
    assert "empty_graph" in out


def test_wiener_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "wiener", "F(6,25)")
    assert code == 1
    assert "6 is not a prime power" in err


def test_wiener_unknown_method_is_usage_error(capsys):
    code, _, err = run(capsys, "wiener", "Z(6)", "--method", "magic")
    assert code == 1
    assert "invalid choice" in err


def test_wiener_brute_limit_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("COZERO_BRUTE_LIMIT", "50")
    code, _, err = run(capsys, "wiener", "Z(100)", "--method", "brute")
    assert code == 1
    assert "limit" in err
    code, out, _ = run(capsys, "wiener", "Z(100)", "--method", "brute", "--brute-limit", "200")
    assert code == 0
    assert "wiener=2954" in out


def test_compare_agreement(capsys):
    code, out, _ = run(capsys, "compare", "ZxZ(2,4,9)")
    assert code == 0
    assert out.count("2611") >= 3
    assert "all methods agree" in out


def test_compare_includes_crt_cross_check(capsys):
    code, out, _ = run(capsys, "compare", "Z(36)", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    methods = [r["method"] for r in payload["records"]]
    assert "quotient[crt]" in methods
    assert {r["wiener"] for r in payload["records"]} == {"420"}


def test_compare_empty_graph(capsys):
    code, out, _ = run(capsys, "compare", "Z(7)")
    assert code == 0
    assert "empty_graph" in out


def test_compare_skips_brute_over_limit(capsys):
    code, out, _ = run(capsys, "compare", "Z(150)", "--brute-limit", "100")
    assert code == 0
    assert "brute skipped" in out


def test_compare_detects_mismatch(capsys, monkeypatch):
    import cozero.cli as cli_mod

    def bogus(spec):
        return WienerReport(
            status=report_mod.STATUS_VALUE,
            method="quotient",
            vertex_count=59,
            class_count=7,
            component_count=1,
            wiener=1,
            diameter=3,
        )

    monkeypatch.setattr(cli_mod, "wiener_quotient", bogus)
    code, out, _ = run(capsys, "compare", "Z(100)")
    assert code == 3
    assert "MISMATCH" in out


def test_table_zn_default_markdown(capsys):
    code, out, _ = run(capsys, "table", "zn")
    assert code == 0
    assert "| 2954 | 77174 | 306202 | 930248 | 1222530 | 1946274 |" in out


def test_table_zn_custom_param(capsys):
    code, out, _ = run(capsys, "table", "zn", "12", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,wiener", "12,34"]


def test_table_fields3_csv(capsys):
    code, out, _ = run(capsys, "table", "fields3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q1,q2,q3,wiener"
    assert "289,343,361,71251552134" in lines
    assert "7,8,13,35196" in lines


def test_table_ppprod_defaults(capsys):
    code, out, _ = run(capsys, "table", "ppprod")
    assert code == 0
    assert "| ZxZ(2,4,9,9) | 232937 |" in out
    assert "| ZxZ(3,4,8,8) | 333963 |" in out
    assert out.count("|") > 20


def test_table_rejects_bad_tuple(capsys):
    code, _, err = run(capsys, "table", "fields2", "9", "--format", "csv")
    assert code == 1
    assert "expects 2" in err


def test_classes_listing(capsys):
    code, out, _ = run(capsys, "classes", "Z(12)")
    assert code == 0
    assert "4 classes" in out
    assert "key=2  size=2" in out
    assert "2~3" in out


def test_classes_json(capsys):
    code, out, _ = run(capsys, "classes", "F(3,5,7)", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["classes"]) == 6
    sizes = sorted(c["size"] for c in payload["classes"])
    assert sizes == [2, 4, 6, 8, 12, 24]


def test_export_graph_edgelist(capsys):
    code, out, _ = run(capsys, "export-graph", "Z(6)", "--graph-format", "edgelist")
    assert code == 0
    assert out == "2 3\n3 4\n"


def test_export_graph_dot(capsys):
    code, out, _ = run(capsys, "export-graph", "Z(4)")
    assert code == 0
    assert out == 'graph {\n  "2";\n}\n'


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = run(capsys, "wiener", "Z(100)", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())[0]["wiener"] == "2954"


def test_bench_zn_csv(capsys):
    code, out, _ = run(capsys, "bench", "zn", "--max", "500", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("ring,method,")
    rows = [line.split(",") for line in lines[1:]]
    assert {r[0] for r in rows} == {"Z(100)", "Z(500)"}
    assert {r[1] for r in rows} == {"brute", "quotient", "closed"}
    assert all(r[3] in ("2954", "77174") for r in rows)


def test_bench_only_method(capsys):
    code, out, _ = run(capsys, "bench", "zn", "--n", "2500", "--only", "quotient", "--format", "csv")
    assert code == 0
    assert "Z(2500),quotient,value,1946274" in out


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "wiener" in out and "compare" in out and "bench" in out


def test_missing_command_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 1
