from fractions import Fraction

import pytest

import hecke_trace as ht


def test_traces():
    assert ht.trace(1, 12, 2) == -24
    assert ht.trace(11, 2, 1) == 1
    assert ht.trace(4, 3, 7, chi=1) == 0
    assert ht.trace_gamma1(7, 4, 2) == -3
    assert ht.trace_gamma1(1, 12, 1, space="MS") == 3
    assert ht.trace_al(11, 11, 2, 1) == -1
    assert ht.trace_m_plus_s(1, 4, 1) == 1


def test_exact_types():
    assert ht.hurwitz(0) == Fraction(-1, 12)
    assert ht.hurwitz(-9) == Fraction(-3, 2)
    assert ht.h0(-7) == 1
    assert isinstance(ht.trace(1, 12, 2), int)
    v = ht.trace(19, 3, 4, chi=3)
    assert v["m"] == 3
    assert all(isinstance(c, (int, Fraction)) for c in v["coeffs"])


def test_breakdown_sums():
    b = ht.trace(11, 2, 1, breakdown=True)
    assert b["elliptic"] + b["boundary"] + b["cusp"] + b["delta"] == b["value"]


def test_big_values():
    # tau(97) needs more than 32 bits; a_n at weight 26 overflows 64 bits.
    assert ht.trace(1, 12, 97) == 75013568546
    assert ht.trace(1, 26, 50) > 2**63 or ht.trace(1, 26, 50) < -(2**63)


def test_trace_form_and_characters():
    assert ht.trace_form(1, 12, 5) == [0, 1, -24, 252, -1472, 4830]
    assert ht.trace_form(4, 6, 5, parity="odd") == [0, 1, 0, -12, 0, 54]
    chars = ht.characters(5)
    assert [c["order"] for c in chars] == [1, 4, 2, 4]
    assert ht.genus_x0(37) == 2


def test_errors():
    with pytest.raises(ValueError):
        ht.trace(0, 2, 1)
    with pytest.raises(ht.PreconditionError):
        ht.trace_al(12, 2, 2, 1)
    with pytest.raises(ValueError):
        ht.trace_gamma1(5, 2, 1, space="X")


def test_selfcheck():
    r = ht.selfcheck("genus")
    assert r["cases"] == 100
    assert r["failures"] == []
