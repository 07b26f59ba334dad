import pytest

from gammaq.partitions import enumerate_strict
from gammaq.qkostka import (
    LTable,
    expand_g_in_q,
    l_direct,
    l_recursive,
    l_table,
    l_two_row,
)
from gammaq.tpoly import ONE, TPoly, ZERO
from gammaq.verify import (
    check_l_degree,
    check_l_divisibility,
    check_l_oracle,
    check_l_prefix,
    check_l_stability,
    check_l_support,
    check_l_top_row,
    check_l_two_row,
    diagnostic_l_positivity,
)


def test_l_direct_examples():
    assert l_direct((4, 1), (3, 2)) == TPoly([0, 2])
    assert l_direct((4, 2, 1), (4, 2, 1)) == ONE
    assert l_direct((5,), (3, 2)) == TPoly([0, 0, 2])
    with pytest.raises(ValueError):
        l_direct((4, 4), (5, 3))  # non-strict row
    with pytest.raises(ValueError):
        l_direct((3, 1), (3, 2))  # weight mismatch


def test_l_recursive_examples():
    assert l_recursive((4, 1), (3, 2)) == TPoly([0, 2])
    assert l_recursive((5, 2), (4, 3)) == TPoly([0, 2])
    assert l_recursive((4, 2, 1), (4, 2, 1)) == ONE
    assert l_recursive((), ()) == ONE


def test_l_two_row_examples():
    assert l_two_row((4, 1), (3, 2)) == TPoly([0, 2])
    assert l_two_row((3, 2), (3, 2)) == ONE
    assert l_two_row((5,), (3, 2)) == TPoly([0, 0, 2])
    assert l_two_row((3, 2, 1), (4, 2)) == ZERO  # not dominated
    with pytest.raises(ValueError):
        l_two_row((5,), (5,))


def test_expand_g_in_q():
    assert expand_g_in_q((3, 2)).entries == {
        (3, 2): ONE,
        (4, 1): TPoly([0, 2]),
        (5,): TPoly([0, 0, 2]),
    }
    for n in range(1, 7):
        assert expand_g_in_q((n,)).entries == {(n,): ONE}


def test_l_table_diagonal():
    table = l_table(5)
    for lam in enumerate_strict(5):
        assert table.entry(lam, lam) == ONE
    assert table.weight == 5
    assert table.rows() == enumerate_strict(5)


def test_l_table_round_trip():
    table = l_table(6)
    again = LTable.from_json(table.to_json())
    assert again.weight == table.weight
    assert again.entries == table.entries


def test_l_table_jobs_matches_serial():
    assert l_table(6, jobs=4).entries == l_table(6).entries


def test_recursion_equals_oracle():
    r = check_l_oracle(7)
    assert r.passed, r.detail


def test_support_and_diagonal():
    r = check_l_support(7)
    assert r.passed, r.detail


def test_top_row_value():
    r = check_l_top_row(7)
    assert r.passed, r.detail


def test_degree_law():
    r = check_l_degree(7)
    assert r.passed, r.detail


def test_two_power_divisibility():
    r = check_l_divisibility(7)
    assert r.passed, r.detail


def test_prefix_property():
    r = check_l_prefix(9)
    assert r.passed, r.detail


def test_stability():
    r = check_l_stability(7)
    assert r.passed, r.detail


def test_two_row_closed_form():
    r = check_l_two_row(9)
    assert r.passed, r.detail


def test_positivity_diagnostic_runs():
    r = diagnostic_l_positivity(7)
    assert r.diagnostic
    if not r.passed:  # conjectural: report, never fail
        print(f"positivity diagnostic: {r.detail}")
