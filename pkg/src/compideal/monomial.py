"""Monomials and monomial ideals in k[x_1, ..., x_d].

A monomial is a plain tuple of non-negative exponents.  A
:class:`MonomialIdeal` always stores its minimal generators in canonical
order (total degree, then reverse lexicographic), so two ideals are equal
exactly when their generator tuples are.
"""

from itertools import combinations, combinations_with_replacement
from math import comb

from . import kernels
from .errors import DimensionMismatch, EmptyGeneratorSet, NotMPrimary, UnitIdeal


def degree(m):
    return sum(m)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def canonical_key(m):
    """Sort key: total degree, then reverse lexicographic (degrevlex)."""
    return (sum(m), tuple(-e for e in reversed(m)))


def unit_vector(d, i, power=1):
    return tuple(power if k == i else 0 for k in range(d))


def _minimal(gens):
    ordered = sorted(set(gens), key=canonical_key)
    kept = []
    for g in ordered:
        # A divisor has degree <= deg g, so it is already in `kept`.
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """Ideal generated by monomials, kept in canonical minimal form."""

    __slots__ = ("dim", "gens", "_pure")

    def __init__(self, gens, dim=None):
        gens = [tuple(int(e) for e in g) for g in gens]
        if not gens:
            raise EmptyGeneratorSet("a monomial ideal needs at least one generator")
        if dim is None:
            dim = len(gens[0])
        for g in gens:
            if len(g) != dim:
                raise DimensionMismatch(f"generator {g} does not have length {dim}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        self.dim = dim
        self.gens = _minimal(gens)
        self._pure = None

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.gens == other.gens

    def __hash__(self):
        return hash((self.dim, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({list(self.gens)!r}, dim={self.dim})"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.dim,)

    def pure_powers(self):
        """Per axis, the least exponent t with x_i^t in the ideal (None if absent)."""
        if self._pure is None:
            out = [None] * self.dim
            for g in self.gens:
                support = [i for i, e in enumerate(g) if e]
                if len(support) == 1:
                    i = support[0]
                    if out[i] is None or g[i] < out[i]:
                        out[i] = g[i]
                elif not support:
                    out = [0] * self.dim
                    break
            self._pure = tuple(out)
        return self._pure

    def max_exponents(self):
        return tuple(max(g[i] for g in self.gens) for i in range(self.dim))


def minimalize(gens, d):
    """Canonical ideal generated by ``gens``; see :class:`MonomialIdeal`."""
    return MonomialIdeal(gens, d)


def maximal_ideal(d):
    return MonomialIdeal([unit_vector(d, i) for i in range(d)], d)


def max_ideal_power(d, n):
    """M^n, the span of all monomials of degree n."""
    if n == 0:
        return MonomialIdeal([(0,) * d], d)
    gens = []
    for combo in combinations_with_replacement(range(d), n):
        e = [0] * d
        for i in combo:
            e[i] += 1
        gens.append(tuple(e))
    return MonomialIdeal(gens, d)


def _check_dims(I, J):
    if I.dim != J.dim:
        raise DimensionMismatch(f"ambient dimensions differ: {I.dim} != {J.dim}")


def order(I):
    """Largest n with I inside M^n, i.e. the least generator degree."""
    o = min(sum(g) for g in I.gens)
    if o == 0:
        raise UnitIdeal("the unit ideal has order 0")
    return o


def mu(I):
    return len(I.gens)


def contains(I, m):
    if len(m) != I.dim:
        raise DimensionMismatch(f"monomial {m} does not have length {I.dim}")
    return any(divides(g, m) for g in I.gens)


def is_subset(I, J):
    """I contained in J."""
    _check_dims(I, J)
    return all(contains(J, g) for g in I.gens)


def is_mprimary(I):
    return all(p is not None for p in I.pure_powers())


def product(I, J):
    _check_dims(I, J)
    return MonomialIdeal([mono_mul(a, b) for a in I.gens for b in J.gens], I.dim)


def ideal_sum(I, J):
    _check_dims(I, J)
    return MonomialIdeal(I.gens + J.gens, I.dim)


def power(I, n):
    if n < 0:
        raise ValueError("power must be non-negative")
    result = MonomialIdeal([(0,) * I.dim], I.dim)
    base = I
    # Square-and-multiply keeps intermediate generator sets small.
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def colength(I, backend=None):
    """Number of standard monomials, by enumeration under the staircase."""
    bounds = I.pure_powers()
    if any(b is None for b in bounds):
        raise NotMPrimary("ideal has infinite colength (missing a pure power)")
    return kernels.staircase_count(I.gens, bounds, backend=backend)


def colength_inclusion_exclusion(I):
    """Independent colength oracle: inclusion-exclusion over generator lcms.

    Exponential in the number of generators; intended for small ideals.
    """
    bounds = I.pure_powers()
    if any(b is None for b in bounds):
        raise NotMPrimary("ideal has infinite colength (missing a pure power)")
    box = 1
    for b in bounds:
        box *= b
    inside = 0
    gens = I.gens
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            lcm = subset[0]
            for g in subset[1:]:
                lcm = mono_lcm(lcm, g)
            count = 1
            for b, e in zip(bounds, lcm):
                count *= max(0, b - e)
            inside += count if r % 2 else -count
    return box - inside


def standard_monomials(I):
    """All exponent vectors outside the M-primary ideal I (canonical order)."""
    from itertools import product as cartesian

    bounds = I.pure_powers()
    if any(b is None for b in bounds):
        raise NotMPrimary("ideal has infinite colength (missing a pure power)")
    pts = [v for v in cartesian(*(range(b) for b in bounds)) if not contains(I, v)]
    return sorted(pts, key=canonical_key)


def binomial(a, b):
    """C(a, b), zero when a < b or b < 0."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)
