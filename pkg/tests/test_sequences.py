import pytest
from hypothesis import given, strategies as st

from braidet.braid import TghwParams
from braidet.closed_form import det_closed_form, matrix_oracle, trace_power
from braidet.sequences import (
    check_identity_hybrid,
    check_identity_one_five,
    check_identity_torus,
    check_identity_weaving,
    lucas,
    m_lucas,
    m_lucas_binet,
)


def test_lucas_examples():
    assert lucas(0) == 2
    assert lucas(4) == 7
    assert lucas(4) - 2 == 5
    assert [lucas(n) for n in range(10)] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]


def test_m_lucas_examples():
    for m in range(1, 10):
        assert m_lucas(m, 0) == 2
        assert m_lucas(m, 1) == m
    assert all(m_lucas(1, n) == lucas(n) for n in range(21))
    assert m_lucas(2, 2) == 6
    assert [m_lucas(2, n) for n in range(5)] == [2, 2, 6, 14, 34]


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        m_lucas(0, 3)
    with pytest.raises(ValueError):
        lucas(-1)


def test_weaving_anchors():
    rep = check_identity_weaving(5)
    assert rep.ok and rep.checked == 5
    lookup = {r.params[2]: r.left for r in rep.records}
    assert lookup[2] == 5 == lucas(4) - 2
    assert lookup[4] == 45 == lucas(8) - 2
    assert lookup[5] == 121 == lucas(10) - 2


def test_hybrid_anchors():
    rep = check_identity_hybrid(3, 2)
    assert rep.ok
    assert rep.checked == 3 * 2 * 3
    assert det_closed_form(TghwParams(3, 3, 1, 1)) == 13 == m_lucas(3, 2) + 2
    assert det_closed_form(TghwParams(1, 1, 1, 0)) == 1 == m_lucas(1, 2) - 2
    assert det_closed_form(TghwParams(2, 2, 2, 0)) == 32 == m_lucas(2, 4) - 2
    assert matrix_oracle(TghwParams(2, 2, 2, 0)) == 32


def test_torus_anchors():
    rep = check_identity_torus(9)
    assert rep.ok
    assert {r.params[0]: r.left for r in rep.records}[3] == 3
    assert {r.params[0]: r.left for r in rep.records}[9] == 9
    assert {r.params[0]: r.left for r in rep.records}[1] == 1


def test_one_five_anchors():
    rep = check_identity_one_five(2, (0, 2))
    assert rep.ok
    vals = {r.params: r.left for r in rep.records}
    assert vals[(1, 5, 1, 1)] == 9 == lucas(4) + 2
    assert vals[(1, 5, 1, 2)] == 5 == lucas(4) - 2
    assert vals[(1, 5, 2, 0)] == 45 == trace_power(5, 2) - 2


def test_reports_are_sorted():
    rep = check_identity_one_five(3, (-2, 2))
    assert [r.params for r in rep.records] == sorted(r.params for r in rep.records)


def test_report_flags_violation():
    from braidet.report import Report

    rep = Report("demo")
    rep.add((1,), 3, 3)
    rep.add((2,), 3, 4)
    assert not rep.ok
    assert rep.summary()["failed"] == 1
    assert rep.summary()["failures"][0]["params"] == [2]


@given(st.integers(1, 12), st.integers(0, 40))
def test_binet_bridge(m, n):
    assert trace_power(m * m, n) == m_lucas(m, 2 * n)


@given(st.integers(0, 40))
def test_golden_bridge(n):
    assert trace_power(5, n) == lucas(4 * n)


@given(st.integers(1, 20), st.integers(0, 60))
def test_float_binet_sanity(m, n):
    exact = m_lucas(m, n)
    if abs(exact) < 2**53:
        assert abs(m_lucas_binet(m, n) - exact) <= 1e-6 * max(1, abs(exact))
