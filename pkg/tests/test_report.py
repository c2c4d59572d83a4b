"""The structured report document: schema, determinism, exit codes."""

import pytest

from quandles.report import CheckEntry, ReportDocument, format_value


def make_doc():
    doc = ReportDocument("unit test", "0.0.0")
    doc.add("alpha", "first claim", "pass", {"n": 3, "flag": True})
    doc.add("beta", "second claim", "skipped", {"cap": 10}, seconds=1.5)
    return doc


def test_render_is_deterministic():
    assert make_doc().render() == make_doc().render()


def test_render_schema():
    text = make_doc().render()
    lines = text.splitlines()
    assert lines[0] == "report-version: 1"
    assert lines[1] == "tool: quandles 0.0.0"
    assert lines[2] == "input: unit test"
    assert lines[3] == "checks: 2"
    assert lines[4] == "result: pass"
    assert "[alpha]" in lines
    assert "data.flag: true" in lines
    assert "data.n: 3" in lines


def test_data_keys_sorted():
    doc = ReportDocument("x", "0")
    doc.add("c", "claim", "pass", {"zeta": 1, "alpha": 2})
    body = doc.render()
    assert body.index("data.alpha") < body.index("data.zeta")


def test_timings_hidden_by_default():
    doc = make_doc()
    assert "seconds" not in doc.render()
    assert "seconds: 1.500" in doc.render(timings=True)


def test_exit_codes():
    doc = make_doc()
    assert doc.exit_code() == 0  # skipped and reported do not fail
    doc.add("gamma", "third claim", "fail", {})
    assert doc.exit_code() == 1
    assert "result: fail" in doc.render()


def test_duplicate_ids_rejected():
    doc = make_doc()
    with pytest.raises(ValueError):
        doc.add("alpha", "again", "pass")


def test_unknown_status_rejected():
    with pytest.raises(ValueError):
        CheckEntry("x", "claim", "maybe")


def test_format_value():
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value([1, "a"]) == "[1, a]"
    assert format_value(2.5) == "2.5"
    assert format_value("plain") == "plain"
