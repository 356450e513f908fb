"""Verification reports: item invariants, summaries, and JSON round-trips."""

import pytest

from qgrass.report import Item, VerificationReport, render_item


def test_residual_nonempty_exactly_on_failure():
    rep = VerificationReport("demo")
    rep.check("a", True, lhs="x", rhs="x")
    rep.check("b", False, lhs="x", rhs="y", residual="x - y")
    rep.check("c", False)  # residual filled in with a placeholder
    rep.skip("d", lhs="skipped thing")
    assert [i.status for i in rep.items] == ["pass", "fail", "fail", "skipped"]
    assert rep.items[0].residual == "" and rep.items[1].residual == "x - y"
    assert rep.items[2].residual != ""
    assert rep.summary == {"pass": 1, "fail": 2, "skipped": 1}
    assert not rep.ok
    assert [i.id for i in rep.failures] == ["b", "c"]
    with pytest.raises(AssertionError):
        Item("bad", "pass", residual="should not be here")
    with pytest.raises(AssertionError):
        Item("bad", "fail")


def test_json_round_trip():
    rep = VerificationReport("demo")
    rep.start()
    rep.check("a", True, lhs="1", rhs="1")
    rep.check("b", False, residual="boom")
    back = VerificationReport.from_json(rep.to_json())
    assert back.suite == "demo"
    assert back.items == rep.items
    assert back.summary == rep.summary


def test_render_text():
    rep = VerificationReport("demo")
    rep.check("good", True, lhs="l", rhs="r")
    rep.check("bad", False, residual="difference")
    text = rep.render_text()
    assert text.splitlines()[0] == "suite demo"
    assert "[  ok] good" in text and "[FAIL] bad" in text
    assert "1 pass, 1 fail, 0 skipped" in text
    assert "difference" in render_item(rep.items[1])
