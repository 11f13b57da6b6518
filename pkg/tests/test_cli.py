import json
from pathlib import Path

import jsonschema
import pytest

from l2zeta.cli import EXIT_INVALID, EXIT_OK, main, parse_complex
from l2zeta.fixtures import fixture_path
from l2zeta.reportio import dump_report, load_report

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def fx(name):
    return str(fixture_path(name))


def test_parse_complex():
    assert parse_complex("0.1,-0.2") == complex(0.1, -0.2)
    assert parse_complex("3") == 3
    with pytest.raises(ValueError):
        parse_complex("a,b")


def test_eval_text(capsys):
    assert main(["eval", fx("graph1"), "--u", "0.05,0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "1.10806402932234" in out and "validity: ok" in out


def test_eval_limit_and_json(capsys):
    assert main(["eval", fx("graph1"), "--u", "0,0"]) == EXIT_OK
    assert "limit value" in capsys.readouterr().out
    assert main(["eval", fx("line"), "--u", "0.3,0.1", "--json"]) == EXIT_OK
    data = load_report(capsys.readouterr().out)
    assert abs(data["zeta"] - 1) < 1e-12


@pytest.mark.parametrize("argv", [
    ["eval", "GRAPH", "--u", "nope"],
    ["eval", "MISSING", "--u", "0.1"],
    ["eval", "GRAPH"],
    ["frobnicate"],
    ["oracle", "GRAPH", "--u", "0,0"],
    ["oracle", "GRAPH", "--u", "0.05", "--theta-samples", "8"],
])
def test_invalid_input_exit_code(argv, tmp_path):
    argv = [fx("graph1") if a == "GRAPH" else str(tmp_path / "none.json") if a == "MISSING" else a
            for a in argv]
    assert main(argv) == EXIT_INVALID


def test_malformed_graph_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"], "edges": [{"from": "a", "to": "q"}]}')
    assert main(["eval", str(bad), "--u", "0.1"]) == EXIT_INVALID
    assert "edges[0].to" in capsys.readouterr().err


def test_degenerate_alpha_exit_code():
    # alpha = 4u^2 underflows to zero here
    assert main(["eval", fx("sawtooth"), "--u", "1e-200,0"]) == EXIT_INVALID


def test_analyze_roundtrip_and_schema(tmp_path):
    out = tmp_path / "r.json"
    assert main(["analyze", fx("sawtooth"), "--out", str(out)]) == EXIT_OK
    text = out.read_text()
    assert dump_report(load_report(text)) == text
    raw = json.loads(text)
    schema = json.loads((SCHEMAS / "report.schema.json").read_text())
    jsonschema.validate(raw, schema)
    s = raw["surface"]
    assert (s["d"], s["b"], s["genus"], s["galois"]) == (4, 12, 3, False)


def test_analyze_line(capsys):
    assert main(["analyze", fx("line")]) == EXIT_OK
    raw = json.loads(capsys.readouterr().out)
    assert raw["surface"]["d"] == 1 and raw["surface"]["genus"] == 0
    assert raw["zeta_identically_one"] is True


def test_analyze_non_regular(capsys):
    assert main(["analyze", fx("graph6"), "--no-symbolic"]) == EXIT_OK
    raw = json.loads(capsys.readouterr().out)
    assert raw["graph"]["q"] == "non-regular" and raw["functional_equation"] is None
    assert raw["omega"]["method"] == "sampled"


def test_graph_schema_accepts_fixtures():
    schema = json.loads((SCHEMAS / "graph.schema.json").read_text())
    for name in ("line", "sawtooth", "triladder"):
        jsonschema.validate(json.loads(Path(fx(name)).read_text()), schema)


def test_oracle_output(capsys):
    assert main(["oracle", fx("sawtooth"), "--u", "0.05,0.02"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "census series:      1 0 0 4 4 4 26 52 122" in out
    assert "closed-form series: 1 0 0 4 4 4 26 52 122" in out


def test_plot(tmp_path):
    svg = tmp_path / "s.svg"
    assert main(["plot", fx("sawtooth"), "--svg", str(svg)]) == EXIT_OK
    text = svg.read_text()
    assert text.startswith("<svg") and text.count('r="5"') == 7
    assert "∞ branched (2,1,1)" in text
    assert main(["plot", fx("graph6"), "--svg", str(svg)]) == EXIT_OK
    assert "stroke-dasharray" in svg.read_text()
