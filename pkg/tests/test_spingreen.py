import pytest

from gammaq.golden import golden_y_polys
from gammaq.partitions import enumerate_odd, enumerate_strict
from gammaq.spingreen import (
    SpinCharTable,
    YTable,
    spin_char_table,
    spin_character,
    y_direct,
    y_recursive,
    y_table,
    y_two_row,
    y_via_l,
)
from gammaq.tpoly import ONE, TPoly
from gammaq.verify import (
    check_char_integrality,
    check_frobenius,
    check_y_degree,
    check_y_one_row,
    check_y_reconstruction,
    check_y_routes,
    check_y_two_row,
    diagnostic_y_positivity,
)


def test_y_direct_examples():
    assert y_direct((2, 1), (3,)) == TPoly([-2, 2])
    for n in range(1, 8):
        for mu in enumerate_odd(n):
            assert y_direct((n,), mu) == ONE
    assert y_direct((4, 3), (5, 1, 1)) == TPoly([0, -2, 0, 2])
    with pytest.raises(ValueError):
        y_direct((2, 1), (2, 1))  # non-odd column
    with pytest.raises(ValueError):
        y_direct((3, 1), (3,))  # weight mismatch


def test_y_recursive_examples():
    assert y_recursive((3, 2, 1), (3, 3)) == TPoly([-4, 4, 4, -8, 4])
    assert y_recursive((4, 2, 1), (1,) * 7) == TPoly([7, 28, 46, 20, 4])
    assert y_recursive((5, 1), (5, 1)) == TPoly([-1, 2])
    assert y_recursive((6, 1), (3, 3, 1)) == TPoly([-1, 2])


def test_y_two_row_examples():
    assert y_two_row(4, 7, (5, 1, 1)) == TPoly([0, -2, 0, 2])
    assert y_two_row(5, 7, (5, 1, 1)) == TPoly([-1, 0, 2])
    assert y_two_row(2, 3, (1, 1, 1)) == TPoly([1, 2])
    with pytest.raises(ValueError):
        y_two_row(2, 4, (3, 1))  # (2,2) is not strict
    with pytest.raises(ValueError):
        y_two_row(4, 7, (3, 3))  # weight mismatch


def test_y_via_l_examples():
    assert y_via_l((3, 2), (5,)) == TPoly([2, -4, 2])
    assert y_via_l((4, 1), (1,) * 5) == TPoly([3, 2])
    for mu in enumerate_odd(6):
        assert y_via_l((6,), mu) == ONE


def test_spin_character_examples():
    assert spin_character((3,), (1, 1, 1)) == 2
    assert spin_character((2, 1), (1, 1, 1)) == 1
    assert spin_character((2, 1), (3,)) == -1


def test_y_table_matches_golden():
    for n in range(3, 8):
        table = y_table(n)
        golden = golden_y_polys(n)
        for lam in enumerate_strict(n):
            for mu in enumerate_odd(n):
                assert table.entry(lam, mu) == golden[(lam, mu)], (n, lam, mu)


def test_y_table_spot_values():
    t6 = y_table(6)
    assert [t6.entry(lam, (3, 1, 1, 1)) for lam in enumerate_strict(6)] == [
        ONE,
        TPoly([1, 2]),
        TPoly([-1, 2, 2]),
        TPoly([-1, -2, -2, 4, 4]),
    ]
    t7 = y_table(7)
    assert t7.entry((4, 3), (1,) * 7) == TPoly([5, 18, 10, 2])


def test_spin_char_table_small():
    table = spin_char_table(4)
    assert table.entry((4,), (3, 1)) == 1
    assert table.entry((4,), (1, 1, 1, 1)) == 2
    assert table.entry((3, 1), (3, 1)) == -1
    assert table.entry((3, 1), (1, 1, 1, 1)) == 4


def test_table_round_trips():
    yt = y_table(5)
    assert YTable.from_json(yt.to_json()).entries == yt.entries
    ct = spin_char_table(5)
    assert SpinCharTable.from_json(ct.to_json()).entries == ct.entries


def test_y_table_jobs_matches_serial():
    assert y_table(6, jobs=4).entries == y_table(6).entries


def test_three_routes_agree():
    r = check_y_routes(7)
    assert r.passed, r.detail


def test_degree_and_leading_coefficient():
    r = check_y_degree(7)
    assert r.passed, r.detail


def test_one_row_values():
    r = check_y_one_row(9)
    assert r.passed, r.detail


def test_two_row_closed_form():
    r = check_y_two_row(7)
    assert r.passed, r.detail


def test_reconstruction():
    r = check_y_reconstruction(7)
    assert r.passed, r.detail


def test_frobenius_consistency():
    r = check_frobenius(7)
    assert r.passed, r.detail


def test_character_integrality_and_parity():
    r = check_char_integrality(9)
    assert r.passed, r.detail


def test_positivity_diagnostic_runs():
    r = diagnostic_y_positivity(7)
    assert r.diagnostic
    if not r.passed:  # conjectural: report, never fail
        print(f"positivity diagnostic: {r.detail}")
