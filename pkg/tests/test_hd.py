from fractions import Fraction

import pytest
from hypothesis import given, settings

from compideal.blowup import constellation, is_finitely_supported
from compideal.errors import InsufficientData, NotMPrimary
from compideal.hd import defect_report, hd_check, hd_sum, hd_term, hilbert_table, scaled_hd_sum
from compideal.monomial import MonomialIdeal, binomial, max_ideal_power
from compideal.newton import closure, closure_colength
from helpers import EX71, mprimary_ideals


def test_ex71_identity():
    rep = hd_check(EX71)
    assert (rep.colength_closure, rep.hd_sum, rep.defect) == (19, 19, 0)
    assert rep.identity_holds
    # 10 + 4 + 5 * 1
    assert sorted(t for _, _, t in rep.per_node) == [1, 1, 1, 1, 1, 4, 10]


def test_ex71_hilbert_table():
    t = hilbert_table(EX71)
    assert t.samples[:4] == [0, 19, 96, 271]
    assert t.fit_valid_from == 0
    assert t.multiplicity == 40
    assert t.binomial_coefficients() == [40, 22, 1, 0]
    for n in range(8):
        assert t.value(n) == 40 * binomial(n + 2, 3) - 22 * binomial(n + 1, 2) + n


def test_defect_report_from_supplied_lengths():
    rep = defect_report(18, [3], 3, [9])
    assert rep.hd_sum == 19 and rep.defect == 1
    assert not rep.identity_holds
    with pytest.raises(InsufficientData):
        defect_report(None, [3], 3)
    with pytest.raises(InsufficientData):
        defect_report(18, [], 3)


def test_hd_term_values():
    assert hd_term(3, 3) == 10
    assert hd_term(1, 3) == 1
    assert hd_term(2, 2) == 3


def test_hilbert_table_guards():
    with pytest.raises(ValueError):
        hilbert_table(EX71, n_max=3)
    with pytest.raises(NotMPrimary):
        hilbert_table(MonomialIdeal([(1, 0), (1, 1)]))


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_powers_of_m(d, n):
    I = max_ideal_power(d, n)
    rep = hd_check(I)
    assert rep.defect == 0
    assert rep.hd_sum == binomial(n + d - 1, d)
    t = hilbert_table(I)
    assert t.multiplicity == n ** d
    assert t.leading_coefficient == Fraction(n ** d, [1, 1, 2, 6, 24][d])


@given(mprimary_ideals())
@settings(max_examples=80, deadline=None)
def test_length_formula_for_finitely_supported(I):
    if not is_finitely_supported(I).finitely_supported:
        return
    c = constellation(I)
    assert hd_sum(c) == closure_colength(I)
    for n in (2, 3):
        assert scaled_hd_sum(c, n) == closure_colength(I, n)


@given(mprimary_ideals(dims=(2,)))
@settings(max_examples=40, deadline=None)
def test_hilbert_function_is_polynomial_everywhere_in_dimension_two(I):
    bar = closure(I)
    t = hilbert_table(bar, n_max=6)
    # finitely supported complete ideals: the length formula is a polynomial in n
    assert t.fit_valid_from == 0
