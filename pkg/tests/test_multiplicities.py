import pytest
from hypothesis import given, settings

from compideal.blowup import is_finitely_supported
from compideal.errors import DimensionMismatch, NotFinitelySupported
from compideal.hd import hilbert_table
from compideal.monomial import (
    MonomialIdeal,
    binomial,
    max_ideal_power,
    maximal_ideal,
    order,
    product,
)
from compideal.multiplicities import (
    fiber_numerator,
    mixed_from_fitting,
    mixed_from_point_bases,
    mixed_multiplicities,
    multi_indices,
    multiplicity,
    pair_mixed,
)
from helpers import EX71, I1, I2, mprimary_ideals

M3 = maximal_ideal(3)


def test_multi_indices_order_and_count():
    idx = multi_indices(2, 3)
    assert idx == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(multi_indices(3, 3)) == binomial(5, 2)


def test_ex71_multiplicity_and_mixed():
    assert multiplicity(EX71) == 40
    rep = mixed_multiplicities([M3, EX71])
    assert rep.source == "both" and not rep.discrepancies
    assert rep.mixed[(2, 1)] == 3 and rep.mixed[(1, 2)] == 9
    assert rep.e == [1, 40]


def test_ex74_mixed_by_fitting():
    assert pair_mixed(M3, I1, 2, method="fitting") == 2
    assert pair_mixed(M3, I2, 2, method="fitting") == 1
    e111 = mixed_multiplicities([M3, I1, I2], method="fitting").mixed[(1, 1, 1)]
    assert e111 == 1
    P = product(I1, I2)
    e_prod = pair_mixed(M3, P, 2, method="fitting")
    assert e_prod == 5 == 2 + 1 + 2 * e111
    assert e_prod > order(P) ** 2


def test_point_basis_route_refuses_ex74():
    with pytest.raises(NotFinitelySupported):
        mixed_from_point_bases([M3, I1])
    rep = mixed_multiplicities([M3, I1])
    assert rep.source == "fitting" and rep.notices


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mixed_multiplicities([M3, maximal_ideal(2)])


def test_ex71_fiber_numerator():
    f = fiber_numerator(EX71)
    assert f.numerator == [1, 8]
    assert f.mu_values[:3] == [1, 11, 30]


@pytest.mark.parametrize("d, n", [(2, 3), (3, 2), (3, 4), (4, 2)])
def test_powers_of_m(d, n):
    I = max_ideal_power(d, n)
    assert multiplicity(I) == n ** d
    # the fiber cone of M^n is a Veronese ring, so mu(M^nk) = C(nk + d - 1, d - 1)
    f = fiber_numerator(I, n_max=d + 4)
    assert f.mu_values == [binomial(n * k + d - 1, d - 1) for k in range(d + 5)]


@given(mprimary_ideals(max_exp=4, max_extra=3))
@settings(max_examples=25, deadline=None)
def test_fitting_agrees_with_point_bases(I):
    if not is_finitely_supported(I).finitely_supported:
        return
    M = maximal_ideal(I.dim)
    assert mixed_from_fitting([M, I]) == mixed_from_point_bases([M, I])


@given(mprimary_ideals())
@settings(max_examples=60, deadline=None)
def test_mixed_with_maximal_ideal_are_order_powers(I):
    if not is_finitely_supported(I).finitely_supported:
        return
    d = I.dim
    o = order(I)
    mixed = mixed_from_point_bases([maximal_ideal(d), I])
    for i in range(1, d):
        assert mixed[(d - i, i)] == o ** i


@given(mprimary_ideals())
@settings(max_examples=60, deadline=None)
def test_point_basis_multiplicity_matches_hilbert(I):
    if not is_finitely_supported(I).finitely_supported:
        return
    assert multiplicity(I, method="point_basis") == hilbert_table(I).multiplicity


def test_mixed_of_equal_ideals_is_multiplicity():
    I = MonomialIdeal([(2, 0), (1, 1), (0, 3)])
    rep = mixed_multiplicities([I, I])
    assert set(rep.mixed.values()) == {multiplicity(I)}
