"""Integral closure of monomial ideals through the Newton polyhedron.

The closure of a monomial ideal I is generated by the monomials whose
exponents lie in NP(I) = conv(exponents of I) + R^d_{>=0}.  Two exact
routes decide membership:

* :func:`np_member` solves the defining rational feasibility problem
  directly (phase-1 simplex).  Slow per point, used as the reference.
* :class:`NewtonPolyhedron` computes the facet inequalities once (double
  description on the homogenised cone) and hands them to the lattice
  kernels, which scan a box of candidate exponents.

Search box for closure generators: a minimal lattice point v of NP(I)
satisfies v <= max_e e componentwise.  If v_i exceeded every generator's
i-th exponent, then v - e_i would still dominate the same convex
combination, hence lie in NP(I), contradicting minimality.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import DimensionMismatch, NotMPrimary, UnitIdeal
from .monomial import (
    MonomialIdeal,
    canonical_key,
    colength,
    contains,
    maximal_ideal,
    power,
    product,
    unit_vector,
)
from .polyhedra import extreme_rays, lp_feasible


class NewtonPolyhedron:
    """conv(points) + orthant, with an exact facet description."""

    def __init__(self, points, dim):
        self.dim = dim
        self.points = tuple(sorted(set(tuple(p) for p in points)))
        self._facets = None

    @classmethod
    def of(cls, I):
        return _polyhedron(I)

    @property
    def facets(self):
        """List of (normal, rhs): v is a member iff normal . v >= rhs for all."""
        if self._facets is None:
            d = self.dim
            rows = [tuple(p) + (1,) for p in self.points]
            rows += [unit_vector(d + 1, j) for j in range(d)]
            facets = []
            for ray in extreme_rays(rows):
                normal, c = ray[:d], ray[d]
                if c < 0 and any(normal):
                    facets.append((normal, -c))
            self._facets = sorted(facets)
        return self._facets

    def scaled(self, n):
        """Facets of n * NP, as (normals, rhs) lists."""
        return [a for a, _ in self.facets], [n * b for _, b in self.facets]

    def contains(self, v, scale=1):
        if len(v) != self.dim:
            raise DimensionMismatch(f"point {v} does not have length {self.dim}")
        if any(x < 0 for x in v):
            return False
        return all(sum(a * x for a, x in zip(normal, v)) >= scale * b
                   for normal, b in self.facets)


@lru_cache(maxsize=512)
def _polyhedron(I):
    return NewtonPolyhedron(I.gens, I.dim)


def np_member(I, v):
    """Exact LP test: is v in conv(exponents of I) + orthant?"""
    if len(v) != I.dim:
        raise DimensionMismatch(f"point {v} does not have length {I.dim}")
    gens = I.gens
    d = I.dim
    # Variables: one weight per generator, then one slack per coordinate.
    A = []
    for j in range(d):
        A.append([g[j] for g in gens] + [int(k == j) for k in range(d)])
    A.append([1] * len(gens) + [0] * d)
    b = list(v) + [1]
    if any(x < 0 for x in v):
        return False
    return lp_feasible(A, b) is not None


def _require_proper(I):
    if I.is_unit:
        raise UnitIdeal("closure of the unit ideal is not supported")


def closure(I, backend=None):
    _require_proper(I)
    poly = _polyhedron(I)
    normals = [a for a, _ in poly.facets]
    rhs = [b for _, b in poly.facets]
    bounds = tuple(x + 1 for x in I.max_exponents())
    pts = kernels.np_minimal_points(normals, rhs, bounds, backend=backend)
    return MonomialIdeal(pts, I.dim)


def closure_power(I, n, backend=None):
    """Closure of I^n, scanning n * NP(I) instead of forming I^n."""
    if n < 0:
        raise ValueError("power must be non-negative")
    if n == 0:
        return MonomialIdeal([(0,) * I.dim], I.dim)
    _require_proper(I)
    normals, rhs = _polyhedron(I).scaled(n)
    bounds = tuple(n * x + 1 for x in I.max_exponents())
    pts = kernels.np_minimal_points(normals, rhs, bounds, backend=backend)
    return MonomialIdeal(pts, I.dim)


def closure_colength(I, n=1, backend=None):
    """Colength of the closure of I^n without listing its generators."""
    if n == 0:
        return 0
    _require_proper(I)
    pure = I.pure_powers()
    if any(p is None for p in pure):
        raise NotMPrimary("ideal has infinite colength (missing a pure power)")
    normals, rhs = _polyhedron(I).scaled(n)
    bounds = tuple(n * p for p in pure)
    return kernels.np_count_outside(normals, rhs, bounds, backend=backend)


def is_integrally_closed(I):
    return closure(I) == I


def star_product(I, J):
    return closure(product(I, J))


@dataclass(frozen=True)
class MIClosedness:
    closed: bool
    witness: tuple = None


def mi_closedness(I):
    """Is M*I integrally closed?  On failure, the degrevlex-least witness."""
    MI = product(maximal_ideal(I.dim), I)
    bar = closure(MI)
    missing = [g for g in bar.gens if not contains(MI, g)]
    if not missing:
        return MIClosedness(True, None)
    return MIClosedness(False, min(missing, key=canonical_key))


def membership_by_powers(I, v, max_power=8):
    """Brute-force oracle: (x^v)^m in I^m for some m <= max_power."""
    for m in range(1, max_power + 1):
        w = tuple(m * x for x in v)
        if contains(power(I, m), w):
            return True
    return False


def colength_closure_reference(I, n=1):
    """Colength of closure(I^n) through explicit generators (slow path)."""
    return colength(closure(power(I, n)))
