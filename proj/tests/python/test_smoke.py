"""Smoke tests for the _wsys extension module."""

from fractions import Fraction

import _wsys


def test_canonical():
    assert _wsys.canonical("h1 t1") == "t1 h1"
    assert _wsys.canonical("t3 h3 t1 h1") == "t1 h1 t2 h2"


def test_enumeration_counts():
    assert len(_wsys.enumerate_oriented(2)) == 4
    assert len(_wsys.enumerate_oriented(3)) == 22
    assert len(_wsys.enumerate_unoriented(3)) == 5


def test_evaluate_weight_gl_samples():
    nested = _wsys.evaluate_weight("t1 t2 h2 h1", "gl")
    assert nested["binomial"] == ["0", "1/4", "1", "1"]
    assert nested["latex"] == r"{N\choose 3}+{N\choose 2}+\frac{N}{4}"
    sequential = _wsys.evaluate_weight("t1 h1 t2 h2", "gl")
    assert sequential["binomial"] == ["0", "1/4", "2", "2"]


def test_oracle_agrees_with_rules():
    for family in ("gl", "so-even", "so-odd", "sp"):
        poly = _wsys.evaluate_weight("t1 t2 h1 h2", family)
        coeffs = [Fraction(c) for c in poly["monomial"]]
        for n in (2, 3):
            expected = sum(c * n**k for k, c in enumerate(coeffs))
            assert Fraction(_wsys.oracle_eval("t1 t2 h1 h2", family, n)) == expected


def test_averaging_matches_casimir():
    for family in ("gl", "sp"):
        avg = sum(
            Fraction(_wsys.oracle_eval(word, family, 2))
            for word in _wsys.average("c1 c2 c1 c2")
        )
        assert avg == Fraction(_wsys.casimir_eval("c1 c2 c1 c2", family, 2))


def test_bialgebra_report():
    report = _wsys.check_bialgebra("so-odd", 2)
    assert report and all(entry["status"] == "pass" for entry in report)
