"""Command line surface: output formats, golden tables, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import validate as check_schema

from neutrocalc.cli import main

DATA = Path(__file__).parent / "data"

_COMPONENT_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "shape": {"const": "single"},
                "kind": {"const": "std"},
                "value": {"type": "number"},
            },
            "required": ["shape", "kind", "value"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "shape": {"const": "interval"},
                "lo": {"type": "number"},
                "hi": {"type": "number"},
            },
            "required": ["shape", "lo", "hi"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "shape": {"const": "hesitant"},
                "values": {"type": "array", "items": {"type": "number"}, "minItems": 1},
            },
            "required": ["shape", "values"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "shape": {"const": "nonstandard"},
                "members": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "oneOf": [
                            {
                                "type": "object",
                                "properties": {
                                    "kind": {
                                        "enum": ["std", "left", "right", "bimonad"]
                                    },
                                    "value": {"type": "number"},
                                },
                                "required": ["kind", "value"],
                                "additionalProperties": False,
                            },
                            {
                                "type": "object",
                                "required": ["kind_lo", "lo", "kind_hi", "hi"],
                            },
                        ]
                    },
                },
            },
            "required": ["shape", "members"],
            "additionalProperties": False,
        },
    ]
}

EVAL_SCHEMA = {
    "type": "object",
    "properties": {
        "result": {
            "type": "object",
            "properties": {
                "t": _COMPONENT_SCHEMA,
                "i": _COMPONENT_SCHEMA,
                "f": _COMPONENT_SCHEMA,
            },
            "required": ["t", "i", "f"],
            "additionalProperties": False,
        },
        "config": {
            "type": "object",
            "properties": {
                "family": {"enum": ["ti", "if", "plith"]},
                "tnorm": {"enum": ["minmax", "product", "luk"]},
                "scale": {"enum": ["unit", "percent"]},
                "psi": {"type": "number"},
                "omega": {"type": "number"},
            },
            "required": ["family", "tnorm", "scale", "psi", "omega"],
            "additionalProperties": False,
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["result", "config", "warnings"],
    "additionalProperties": False,
}

COMPARE_SCHEMA = {
    "type": "object",
    "properties": {
        "x": {"type": "object"},
        "y": {"type": "object"},
        "relation": {"enum": ["<N", "≤N", "=N", "≥N", ">N", "incomparable"]},
    },
    "required": ["x", "y", "relation"],
    "additionalProperties": False,
}


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 0, err
    return json.loads(out)


class TestEval:
    def test_plain_output(self, capsys):
        code, out, _ = run(capsys, ["eval", "<0.8,0.4,0.3> & <0.6,0.2,0.5>"])
        assert code == 0
        assert out == "<0.6, 0.4, 0.5>\n"

    def test_json_single(self, capsys):
        payload = run_json(
            capsys, ["eval", "<0.8,0.4,0.3> & <0.6,0.2,0.5>", "--json"]
        )
        check_schema(payload, EVAL_SCHEMA)
        assert payload["result"]["t"] == {
            "shape": "single",
            "kind": "std",
            "value": 0.6,
        }
        assert payload["config"]["family"] == "if"
        assert payload["warnings"] == []

    @pytest.mark.parametrize(
        "expr",
        [
            "<R(1),0,0> & <0,0,R(1)>",
            "<[0.1,0.4],[0,0],[0.2,0.3]> | <[0.3,0.5],[0,0],[0.1,0.2]>",
            "<{0.2,0.6},{0},{0.1}> & <{0.5},{0},{0.3}>",
            "!<1,0,0> -> <0.5,0.5,0.5>",
        ],
    )
    def test_json_schema_across_shapes(self, capsys, expr):
        check_schema(run_json(capsys, ["eval", expr, "--json"]), EVAL_SCHEMA)

    def test_family_and_tnorm_flags(self, capsys):
        code, out, _ = run(
            capsys,
            ["eval", "<0.5,0.5,0.5> & <0.5,0.5,0.5>", "--family", "ti", "--tnorm", "product"],
        )
        assert code == 0
        assert out == "<0.25, 0.25, 0.75>\n"

    def test_bindings(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "eval",
                "x | y",
                "--bind",
                "x=<0.2,0.5,0.9>",
                "--bind",
                "y=<0.4,0.1,0.6>",
            ],
        )
        assert code == 0
        assert out == "<0.4, 0.1, 0.6>\n"

    def test_percent_scale(self, capsys):
        code, out, _ = run(
            capsys, ["eval", "<80,40,30> & <60,20,50>", "--scale", "percent"]
        )
        assert code == 0
        assert out == "<0.6, 0.4, 0.5>\n"

    def test_clamp_warning_plain_goes_to_stderr(self, capsys):
        code, out, err = run(
            capsys,
            ["eval", "<1.2,0,0> | <0,0,1>", "--psi", "-0.5", "--omega", "1.5"],
        )
        assert code == 0
        assert out == "<1, 0, 0>\n"
        assert err.startswith("warning: degree 1.2 clamped")

    def test_clamp_warning_json(self, capsys):
        payload = run_json(
            capsys,
            [
                "eval",
                "<1.2,0,0> | <0,0,1>",
                "--psi",
                "-0.5",
                "--omega",
                "1.5",
                "--json",
            ],
        )
        check_schema(payload, EVAL_SCHEMA)
        assert payload["config"]["psi"] == -0.5
        assert len(payload["warnings"]) == 1


class TestCompare:
    @pytest.mark.parametrize(
        "x, y, rel",
        [
            ("0.7", "0.2", ">N"),
            ("L(0.5)", "0.5", "<N"),
            ("L(0.5)", "B(0.5)", "≤N"),
            ("0.5", "B(0.5)", "incomparable"),
            ("R(0.3)", "R(0.3)", "=N"),
        ],
    )
    def test_plain(self, capsys, x, y, rel):
        code, out, _ = run(capsys, ["compare", x, y])
        assert code == 0
        assert out == rel + "\n"

    def test_json(self, capsys):
        payload = run_json(capsys, ["compare", "L(0.5)", "B(0.5)", "--json"])
        check_schema(payload, COMPARE_SCHEMA)
        assert payload["relation"] == "≤N"
        assert payload["x"] == {"kind": "left", "value": 0.5}

    @pytest.mark.parametrize(
        "x, y, symbol",
        [("L(0.5)", "R(0.5)", "≈"), ("0.2", "0.7", "≲"), ("0.7", "0.2", "≳")],
    )
    def test_rough(self, capsys, x, y, symbol):
        code, out, _ = run(capsys, ["rough-compare", x, y])
        assert code == 0
        assert out == symbol + "\n"


class TestInterval:
    def test_inf(self, capsys):
        code, out, _ = run(
            capsys, ["interval", "inf", "--lo", "left:0.2", "--hi", "right:0.8"]
        )
        assert code == 0
        assert out == "L(0.2)\n"

    def test_sup_json(self, capsys):
        payload = run_json(
            capsys, ["interval", "sup", "--lo", "l:0.2", "--hi", "r:0.8", "--json"]
        )
        assert payload == {"which": "sup", "result": {"kind": "right", "value": 0.8}}

    def test_invalid_interval_exits_1(self, capsys):
        code, _, err = run(
            capsys, ["interval", "inf", "--lo", "std:0.5", "--hi", "bimonad:0.5"]
        )
        assert code == 1
        assert err.startswith("error:")


class TestClassifyValidate:
    def test_classify(self, capsys):
        code, out, _ = run(capsys, ["classify", "1", "0", "1"])
        assert code == 0
        assert out == "dialetheism\nmulti-valued\n"

    def test_classify_json(self, capsys):
        payload = run_json(capsys, ["classify", "0.7", "0", "0.3", "--json"])
        assert payload == {"labels": ["fuzzy", "multi-valued"]}

    def test_classify_percent(self, capsys):
        code, out, _ = run(capsys, ["classify", "100", "0", "0", "--scale", "percent"])
        assert code == 0
        assert out == "boolean\nfuzzy\nmulti-valued\n"

    def test_validate_pass(self, capsys):
        code, out, _ = run(capsys, ["validate", "0.5", "0.5", "0.5"])
        assert code == 0
        assert out == "pass\n"

    def test_validate_failure_exits_1(self, capsys):
        code, out, _ = run(capsys, ["validate", "1.2", "0", "0"])
        assert code == 1
        assert out.startswith("t: value 1.2 above upper bound 1")

    def test_validate_widened_bounds(self, capsys):
        code, out, _ = run(
            capsys, ["validate", "1.2", "0", "0", "--psi", "-0.5", "--omega", "1.5"]
        )
        assert code == 0
        assert out == "pass\n"

    def test_validate_json(self, capsys):
        payload = json.loads(
            run(capsys, ["validate", "1.2", "0", "0", "--json"])[1]
        )
        assert payload["ok"] is False
        assert payload["violations"][0]["where"] == "t"


class TestTable:
    @pytest.mark.parametrize(
        "a, b, golden",
        [("0.7", "0.2", "table_07_02.txt"), ("0.5", "0.5", "table_05_05.txt")],
    )
    def test_matches_golden_file(self, capsys, a, b, golden):
        code, out, _ = run(capsys, ["table", "inequalities", "--a", a, "--b", b])
        assert code == 0
        assert out == (DATA / golden).read_text(encoding="utf-8")


class TestAnomaly:
    def test_plain(self, capsys):
        code, out, _ = run(
            capsys, ["anomaly", "--a", "0.2", "--b", "0.8", "--probes", "200"]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "outer interval: ]0.2, R(0.8)["
        assert lines[1] == "inner interval: ]R(0.2), L(0.8)["
        assert "discrepancies: 0" in lines
        assert lines[-1].endswith("contain exactly the same probes")

    def test_json_deterministic_for_seed(self, capsys):
        argv = ["anomaly", "--a", "0.1", "--b", "0.9", "--seed", "42", "--json"]
        first = run_json(capsys, argv)
        second = run_json(capsys, argv)
        assert first == second
        assert first["discrepancies"] == 0
        assert first["memberships_coincide"] is True

    def test_requires_a_below_b(self, capsys):
        code, _, err = run(capsys, ["anomaly", "--a", "0.8", "--b", "0.2"])
        assert code == 1
        assert "requires a < b" in err


class TestExitCodes:
    def test_arity_error_exits_2(self, capsys):
        code, _, err = run(capsys, ["eval", "<0.5,0.5>"])
        assert code == 2
        assert "expected 3" in err

    def test_syntax_error_exits_2(self, capsys):
        code, _, err = run(capsys, ["eval", "a &"])
        assert code == 2
        assert err.startswith("error:")

    def test_bounds_violation_exits_1(self, capsys):
        code, _, err = run(capsys, ["eval", "<1.2,0,0> & <0,0,1>"])
        assert code == 1
        assert "outside active bounds" in err

    def test_unbound_identifier_exits_1(self, capsys):
        code, _, err = run(capsys, ["eval", "x & <1,0,0>"])
        assert code == 1
        assert "has no binding" in err

    def test_unsupported_nonstandard_config_exits_1(self, capsys):
        code, _, err = run(
            capsys, ["eval", "<R(1),0,0> & <0,0,R(1)>", "--tnorm", "product"]
        )
        assert code == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["nonsense"],
            ["interval", "inf", "--lo", "mid:0.5", "--hi", "r:0.8"],
            ["eval", "x", "--bind", "not an identifier=<1,0,0>"],
            ["eval", "x", "--bind", "x=<1,0>"],
            ["table", "inequalities", "--a", "0.5"],
        ],
    )
    def test_usage_errors_exit_2(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "neutrocalc", "compare", "L(0.5)", "R(0.5)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "<N\n"
