import pytest

from partialrandom.report import Report
from partialrandom.suite import FIXTURES, SCALES, run_suite, sections


def test_unknown_scale():
    with pytest.raises(ValueError, match="unknown scale"):
        run_suite("huge")


def test_scales_grow():
    tiny, small = SCALES["tiny"], SCALES["small"]
    assert small.measure_len > tiny.measure_len and small.k_max > tiny.k_max
    assert small.test_imax == 4  # the Levin-Schnorr pool at full size


def test_injection_adds_exactly_one_section():
    base = sum(1 for _ in sections(SCALES["tiny"]))
    assert sum(1 for _ in sections(SCALES["tiny"], inject="non-rule")) == base + 1


def test_injected_premeasure_is_the_only_failure():
    lines = []
    rep = run_suite("tiny", inject="non-premeasure", emit=lines.append)
    assert not rep
    failed = [p.check_id for p in rep.parts if not p]
    assert failed == ["fixture-premeasure"]
    assert any(line.startswith("  witness fixture-premeasure subadditive:") for line in lines)
    assert rep.stats["checks"] == len(rep.parts)


def test_report_lines():
    rep = Report("x")
    rep.stats["n"] = 3
    assert rep.line() == "PASS x n=3"
    for i in range(20):
        rep.fail("bad", frozenset({("0", i)}))
    assert rep.lines()[0] == "FAIL x n=3"
    assert rep.lines()[1] == "  witness x bad: {(0,0)}"
    assert len(rep.lines()) == 11  # witnesses are capped at ten


def test_fixture_names():
    assert set(FIXTURES) == {"non-premeasure", "non-rule"}
