import pytest
from hypothesis import given, settings

from compideal.blowup import is_finitely_supported
from compideal.criteria import (
    generator_bounds,
    length_drop,
    lower_bound,
    mi_criterion,
    upper_bound,
)
from compideal.errors import HypothesisViolation, NotMPrimary
from compideal.monomial import MonomialIdeal, binomial, colength, max_ideal_power, mu, order
from compideal.newton import closure
from helpers import EX71, I1, mprimary_ideals


def test_bound_formulas():
    assert lower_bound(3, 3) == 10
    assert upper_bound(3, 3) == 11
    assert upper_bound(3, 3, i=2, ell=19) == 3 + 1 + 19


def test_ex71_bounds_and_criterion():
    b = generator_bounds(EX71)
    assert (b.lower, b.mu, b.upper) == (10, 11, 11)
    assert b.bounds_hold and b.applicable
    r = mi_criterion(EX71)
    assert r.mi_closed is False and r.witness == (1, 2, 1)
    assert r.criterion_consistent
    assert r.length_drop == 10


def test_ex74_i1_reported_inapplicable():
    r = mi_criterion(I1)
    assert r.mi_closed is True
    assert r.mu == 4 and r.lower == 3
    assert not r.applicable
    assert any("not finitely supported" in n for n in r.hypothesis_notes)
    with pytest.raises(HypothesisViolation):
        mi_criterion(I1, strict=True)
    b = generator_bounds(I1)
    assert not b.applicable and not b.bounds_hold


def test_non_closed_input_is_closed_first():
    I = MonomialIdeal([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    b = generator_bounds(I)
    assert b.mu == mu(closure(I))
    assert b.hypothesis_notes


def test_needs_mprimary():
    with pytest.raises(NotMPrimary):
        generator_bounds(MonomialIdeal([(1, 0, 0), (0, 1, 0)]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_powers_of_m_reach_lower_bound(n):
    r = mi_criterion(max_ideal_power(3, n))
    assert r.mi_closed and r.mu == r.lower
    assert r.criterion_consistent
    assert r.length_drop == binomial(n + 2, 2)


@given(mprimary_ideals())
@settings(max_examples=80, deadline=None)
def test_bounds_and_length_drop_on_random_ideals(I):
    bar = closure(I)
    if not is_finitely_supported(bar).finitely_supported:
        return
    d = bar.dim
    o = order(bar)
    b = generator_bounds(bar)
    assert b.bounds_hold
    assert all(b.mu <= upper_bound(o, d, i, colength(bar)) for i in range(1, d))
    assert length_drop(bar) == binomial(o + d - 1, d - 1)


@given(mprimary_ideals(dims=(3,)))
@settings(max_examples=80, deadline=None)
def test_criterion_matches_direct_test_in_dimension_three(I):
    bar = closure(I)
    if not is_finitely_supported(bar).finitely_supported:
        return
    r = mi_criterion(bar)
    assert r.applicable
    assert r.mi_closed == (r.mu == r.lower)
