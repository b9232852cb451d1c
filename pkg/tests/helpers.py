"""Shared generators and brute-force oracles for the tests."""

import random
from itertools import product

from hypothesis import strategies as st

from compideal.monomial import MonomialIdeal, divides, unit_vector

EX71 = MonomialIdeal([(4, 0, 0), (3, 1, 0), (2, 0, 1), (2, 2, 0), (1, 2, 1), (1, 1, 2),
                      (1, 0, 3), (0, 3, 0), (0, 2, 2), (0, 1, 3), (0, 0, 5)])
I1 = MonomialIdeal([(1, 0, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2)])
I2 = MonomialIdeal([(2, 0, 0), (0, 1, 0), (0, 0, 1)])


def random_mprimary(rng, d, max_exp, extra=5):
    gens = [unit_vector(d, i, rng.randint(1, max_exp)) for i in range(d)]
    for _ in range(rng.randint(0, extra)):
        g = tuple(rng.randint(0, max_exp - 1) for _ in range(d))
        if any(g):
            gens.append(g)
    return MonomialIdeal(gens, d)


def seeded_ideals(seed, d, count, max_exp=5):
    rng = random.Random(seed)
    return [random_mprimary(rng, d, max_exp) for _ in range(count)]


@st.composite
def mprimary_ideals(draw, dims=(2, 3), max_exp=5, max_extra=5):
    d = draw(st.sampled_from(dims))
    pure = [unit_vector(d, i, draw(st.integers(1, max_exp))) for i in range(d)]
    vec = st.tuples(*[st.integers(0, max_exp) for _ in range(d)])
    extra = draw(st.lists(vec.filter(any), max_size=max_extra))
    return MonomialIdeal(pure + extra, d)


@st.composite
def monomial_ideals(draw, d=3, max_exp=4, max_gens=6):
    vec = st.tuples(*[st.integers(0, max_exp) for _ in range(d)])
    gens = draw(st.lists(vec.filter(any), min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, d)


def brute_colength(I):
    """Count monomials below the pure powers not divisible by any generator."""
    bounds = I.pure_powers()
    return sum(1 for v in product(*[range(b) for b in bounds])
               if not any(divides(g, v) for g in I.gens))


def box(I, scale=1):
    return product(*[range(scale * b + 1) for b in I.max_exponents()])


# criterion number -> (passed, summary line); filled by test_acceptance, printed by conftest
ACCEPTANCE = {}
