from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from compideal import groebner as gb
from compideal.blowup import chart_transform
from compideal.errors import DegreeBlowup, NotZeroDimensional
from compideal.groebner import Polynomial, PolynomialIdeal
from compideal.monomial import colength, product
from helpers import EX71, mprimary_ideals, monomial_ideals

X = (1, 0, 0)
Y = (0, 1, 0)
Z = (0, 0, 1)


def poly(terms, d=3):
    return Polynomial(terms, d)


def mono(e):
    return Polynomial.monomial(e)


@st.composite
def polynomials(draw, d, max_deg=3, max_terms=3):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(d)]).filter(
        lambda e: sum(e) <= max_deg)
    terms = draw(st.dictionaries(exps, st.integers(-3, 3).filter(bool),
                                 min_size=1, max_size=max_terms))
    return Polynomial(terms, d)


@st.composite
def poly_ideals(draw, zero_dim=False):
    d = draw(st.sampled_from([2, 3]))
    gens = draw(st.lists(polynomials(d), min_size=1, max_size=3))
    if zero_dim:
        for i in range(d):
            e = [0] * d
            e[i] = draw(st.integers(1, 4))
            gens.append(Polynomial.monomial(e))
    return PolynomialIdeal(gens, d)


def sympy_basis(I):
    names = sympy.symbols(f"v0:{I.dim}")
    exprs = []
    for g in I.gens:
        exprs.append(sum(sympy.Rational(c.numerator, c.denominator)
                         * sympy.prod([v ** k for v, k in zip(names, e)])
                         for e, c in g.terms.items()))
    G = sympy.groebner(exprs, *names, order="grevlex", domain=sympy.QQ)
    out = set()
    for p in G.exprs:
        P = sympy.Poly(p, *names)
        out.add(frozenset((tuple(m), Fraction(int(c.p), int(c.q)))
                          for m, c in zip(P.monoms(), P.coeffs())))
    return out


def ex72():
    gens = [mono((0, 0, 3)), poly({(0, 3, 0): 1, (2, 0, 1): -1})]
    gens += [mono(e) for e in [(0, 2, 2), (1, 1, 2), (2, 0, 2), (1, 2, 1), (2, 1, 1),
                               (3, 0, 1), (2, 2, 0), (3, 1, 0), (4, 0, 0)]]
    return PolynomialIdeal(gens, 3)


def test_arithmetic_and_printing():
    f = poly({(0, 3, 0): 1, (2, 0, 1): -1})
    assert f.to_str() == "y^3 - x^2*z"
    assert (f - f).terms == {}
    assert (f * 2).lc == 2
    assert Polynomial({(1, 0): Fraction(3, 2)}, 2).to_str() == "3/2*x"
    assert (mono(X) + mono(Y)) ** 2 == mono((2, 0, 0)) + mono((1, 1, 0)) * 2 + mono((0, 2, 0))


def test_leading_monomial_is_degrevlex():
    f = poly({(2, 0, 1): 1, (0, 3, 0): 1})
    assert f.lm == (0, 3, 0)
    assert poly({(2, 0, 0): 1, (0, 1, 1): 1}).lm == (2, 0, 0)


def test_small_basis():
    I = PolynomialIdeal([Polynomial({(2, 0): 1}, 2), Polynomial({(0, 1): 1}, 2)])
    assert [g.lm for g in I.groebner_basis()] == [(0, 1), (2, 0)]
    assert gb.gb_colength(I) == 2


def test_monomial_input_gives_minimal_generators():
    I = PolynomialIdeal.from_monomial(EX71)
    assert sorted(g.lm for g in I.groebner_basis()) == sorted(EX71.gens)
    assert gb.gb_colength(I) == 19


def test_ex72_lengths():
    I = ex72()
    assert gb.gb_colength(I) == 18
    T = gb.poly_transform(I, 0)
    assert gb.gb_colength(T) == 9
    expected = PolynomialIdeal([mono(X), poly({(0, 3, 0): 1, (0, 0, 1): -1}), mono((0, 0, 3))])
    assert gb.ideals_equal(T, expected)
    assert gb.exceptional_lengths(I) == [9, 0, 0]
    assert gb.local_colength(I) == 18


def test_ex72_reduction():
    I = ex72()
    J = PolynomialIdeal([mono((0, 0, 3)), poly({(0, 3, 0): 1, (2, 0, 1): -1}), mono((4, 0, 0))])
    assert gb.is_subideal(J, I)
    assert gb.ideals_equal(gb.ideal_product(J, I), gb.ideal_power(I, 2))
    assert not gb.ideals_equal(J, I)


def test_member():
    I = PolynomialIdeal([mono((2, 0)), mono((0, 2))], 2)
    assert not gb.member(mono((1, 1)), I)
    assert gb.member(mono((3, 1)), I)


def test_errors():
    with pytest.raises(NotZeroDimensional):
        gb.gb_colength(PolynomialIdeal([mono(X), mono(Y)]))
    big = PolynomialIdeal([poly({(5, 0, 0): 1, (0, 4, 1): 1}), poly({(0, 5, 0): 1, (1, 0, 4): 1}),
                           poly({(0, 0, 5): 1, (4, 1, 0): 1})])
    with pytest.raises(DegreeBlowup):
        gb.buchberger(big.gens, max_degree=6)


@given(poly_ideals())
@settings(max_examples=40, deadline=None)
def test_basis_matches_sympy(I):
    ours = {frozenset(g.terms.items()) for g in I.groebner_basis()}
    assert ours == sympy_basis(I)


@given(poly_ideals())
@settings(max_examples=30, deadline=None)
def test_basis_is_independent_of_generator_order(I):
    J = PolynomialIdeal(list(reversed(I.gens)), I.dim)
    assert I.groebner_basis() == J.groebner_basis()
    assert gb.buchberger(I.gens) == gb.buchberger(I.gens)


@given(poly_ideals(), st.data())
@settings(max_examples=30, deadline=None)
def test_membership_is_closed_under_multiples(I, data):
    f = I.gens[0]
    g = data.draw(polynomials(I.dim, max_deg=2))
    assert gb.member(f, I)
    assert gb.member(g * f, I)


@given(mprimary_ideals())
@settings(max_examples=60, deadline=None)
def test_colength_agrees_with_staircase(I):
    assert gb.gb_colength(PolynomialIdeal.from_monomial(I)) == colength(I)


@given(monomial_ideals(max_gens=4), monomial_ideals(max_gens=4))
@settings(max_examples=30, deadline=None)
def test_product_agrees_with_monomial_product(I, J):
    P = gb.ideal_product(PolynomialIdeal.from_monomial(I), PolynomialIdeal.from_monomial(J))
    assert sorted(g.lm for g in P.groebner_basis()) == sorted(product(I, J).gens)


@given(mprimary_ideals(dims=(3,)), st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_polynomial_transform_agrees_with_monomial_rule(I, chart):
    T = gb.poly_transform(PolynomialIdeal.from_monomial(I), chart)
    assert T.to_monomial() == chart_transform(I, chart)


@given(poly_ideals(zero_dim=True))
@settings(max_examples=30, deadline=None)
def test_local_length_is_at_most_global(I):
    assert 0 <= gb.local_colength(I) <= gb.gb_colength(I)
