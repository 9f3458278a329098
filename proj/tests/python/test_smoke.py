"""Smoke tests for the jcirc extension module."""
from fractions import Fraction

import pytest

import jcirc


def test_sequence_terms():
    assert [jcirc.seq_term("jacobsthal", k) for k in range(6)] == [0, 1, 1, 3, 5, 11]
    assert [jcirc.seq_term("jacobsthal-lucas", k) for k in range(6)] == [2, 1, 5, 7, 17, 31]
    for k in (0, 1, 17, 100):
        assert jcirc.seq_term("jacobsthal", k) == jcirc.seq_term_binet("jacobsthal", k)


def test_first_row():
    assert jcirc.first_row("jacobsthal", 5) == [1, 1, 3, 5, 11]
    assert jcirc.first_row("jacobsthal-lucas", 3) == [2, 1, 5]


def test_determinants():
    assert jcirc.det_closed("jacobsthal", 3) == 20
    assert jcirc.det_closed("jacobsthal", 4) == -400
    assert jcirc.det_closed("jacobsthal-lucas", 3) == 104
    assert jcirc.det_closed("jacobsthal-lucas", 4) == -675
    for n in range(3, 12):
        for kind in ("jacobsthal", "jacobsthal-lucas"):
            assert jcirc.det_closed(kind, n) == jcirc.det_bareiss(kind, n)


def test_inverse_rows():
    inv = jcirc.inverse_first_row("jacobsthal", 3)
    assert inv["oracle_validated"] is True
    assert inv["first_row"] == [Fraction(-1, 10), Fraction(2, 5), Fraction(-1, 10)]
    inv = jcirc.inverse_first_row("jacobsthal-lucas", 3)
    assert inv["first_row"] == [Fraction(-1, 104), Fraction(23, 104), Fraction(-9, 104)]


def test_eigenvalues():
    lambdas = jcirc.eigenvalues("jacobsthal", 7)
    for k in range(1, 7):
        closed = jcirc.eigenvalue_closed("jacobsthal", 7, k)
        assert abs(closed - lambdas[k]) <= 1e-6 * (1 + abs(lambdas[k]))
    assert jcirc.eigenvalue_real_exact("jacobsthal", 7, 0) == sum(
        jcirc.first_row("jacobsthal", 7)
    )
    with pytest.raises(ValueError):
        jcirc.eigenvalue_closed("jacobsthal", 6, 3)  # w^k = -1 is a removable point


def test_verify_clean():
    records = jcirc.verify("jacobsthal", 3, 8)
    assert all(rec["status"] != "fail" for rec in records)
    assert any(rec["claim"] == "determinant" for rec in records)


def test_bad_arguments():
    with pytest.raises(ValueError):
        jcirc.det_closed("jacobsthal", 2)
    with pytest.raises(ValueError):
        jcirc.seq_term("fibonacci", 3)
