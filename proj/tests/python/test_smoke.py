from fractions import Fraction

import pytest

import gpoly


def test_closed_form_values():
    assert gpoly.g_poly(7, 3) == [0, 10, 12, 3]
    assert gpoly.g_poly(4, 2) == [0, 2, 1]
    assert gpoly.g_poly(2, 1) == [0, 1]
    assert gpoly.via_recurrence(7, 3, "triangular-first") == [0, 10, 12, 3]


def test_domain_errors_are_value_errors():
    with pytest.raises(ValueError):
        gpoly.g_poly(3, 5)
    with pytest.raises(gpoly.DomainError):
        gpoly.verify("9.9")


def test_recurrences_verify():
    ids = gpoly.recurrence_ids()
    assert len(ids) == 14
    for rid in ids:
        assert gpoly.verify(rid, 20)["pass"]


def test_roots_and_interlacing():
    assert gpoly.is_real_rooted(gpoly.g_poly(12, 6))
    assert not gpoly.is_real_rooted([1, 0, 1])
    roots = gpoly.real_roots([0, 2, 1])
    assert [(r["lo"], r["multiplicity"]) for r in roots] == [(-2, 1), (0, 1)]
    assert gpoly.interlaces([0, 1], [0, 2, 1])["relation"] == "weak"
    assert gpoly.interlaces([Fraction(1, 2), 1], [0, 2, 1])["relation"] == "strict"
    assert gpoly.verify_family("diag-half", limit=20)["pass"]


def test_liu_wang_and_mutants():
    assert all(x["satisfied"] for x in gpoly.liu_wang("fixed-d", 12))
    assert not any(x["satisfied"] for x in gpoly.liu_wang("fixed-d", 12, negate_psi=True))


def test_statistics():
    s = gpoly.stats(4)
    assert s["mu"] == Fraction(4, 3)
    assert s["sigma2"] == Fraction(2, 9)
    assert dict(gpoly.r_sequence(7))[7] == Fraction(13, 25)
    assert all(rep["pass"] for rep in gpoly.check_lemmas(30))
    rows = gpoly.normality_report([50, 100, 200])
    clt = [r["clt_distance"] for r in rows]
    assert clt == sorted(clt, reverse=True)
    probe = gpoly.conjecture_probe("floor-sqrt", n_max=40)
    assert probe[0]["n"] == 4
