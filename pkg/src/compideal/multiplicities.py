"""Multiplicities and mixed multiplicities of monomial ideals.

Two independent routes:

* point bases -- for finitely supported ideals, the mixed multiplicity at
  multi-index (i_1, ..., i_g) with sum d is the sum over all base points S
  of prod_j o(I_j^S)^{i_j}, taken over the union of the constellations
  (an ideal whose transform is the unit ideal at S contributes order 0,
  with 0^0 = 1);
* fitting -- exact interpolation of the normalised length
  l(R / closure(I_1^{n_1} ... I_g^{n_g})) in the basis
  prod_j C(n_j + a_j, a_j); the degree-d coefficients are the mixed
  multiplicities.
"""

import random
from dataclasses import dataclass, field
from itertools import product as cartesian

from .blowup import DEFAULT_MAX_DEPTH, chart_transform, constellation
from .errors import (
    DepthExceeded,
    DimensionMismatch,
    NonPolynomialTail,
    NotFinitelySupported,
    NotMPrimary,
    VerificationFailure,
)
from .hd import hilbert_table
from .linalg import solve
from .monomial import MonomialIdeal, binomial, is_mprimary, mu, order, power
from .monomial import product as ideal_product
from .newton import closure_colength


def multi_indices(g, total):
    """All g-tuples of non-negative ints summing to ``total``, colexicographic."""
    out = [a for a in cartesian(range(total + 1), repeat=g) if sum(a) == total]
    return sorted(out, key=lambda a: tuple(reversed(a)))


def _bounded_indices(g, top):
    return [a for a in cartesian(range(top + 1), repeat=g) if sum(a) <= top]


@dataclass
class MultReport:
    dim: int
    count: int
    mixed: dict
    source: str
    e: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    notices: list = field(default_factory=list)

    def to_dict(self):
        return {
            "dim": self.dim,
            "ideals": self.count,
            "e": self.e,
            "mixed": [{"index": list(k), "value": v} for k, v in self.mixed.items()],
            "source": self.source,
            "discrepancies": self.discrepancies,
            "notices": self.notices,
        }


def _orders(ideals):
    return tuple(0 if J.is_unit else order(J) for J in ideals)


def joint_point_orders(ideals, max_depth=DEFAULT_MAX_DEPTH):
    """Per base point of the union of constellations, the tuple of orders."""
    d = ideals[0].dim
    for J in ideals:
        if not is_mprimary(J):
            raise NotMPrimary("mixed multiplicities need M-primary ideals")
    out = []

    def visit(current, path):
        if len(path) > max_depth:
            raise DepthExceeded(f"joint constellation deeper than {max_depth}")
        out.append((path, _orders(current)))
        for i in range(d):
            moved = [J if J.is_unit else chart_transform(J, i) for J in current]
            if all(T.is_unit for T in moved):
                continue
            for T in moved:
                if not T.is_unit and not is_mprimary(T):
                    missing = next(j for j, p in enumerate(T.pure_powers()) if p is None)
                    raise NotFinitelySupported(path + (i,), missing, T)
            visit(moved, path + (i,))

    visit(list(ideals), ())
    return out


def mixed_from_point_bases(ideals):
    d = ideals[0].dim
    nodes = joint_point_orders(ideals)
    result = {}
    for alpha in multi_indices(len(ideals), d):
        total = 0
        for _, orders in nodes:
            term = 1
            for o, a in zip(orders, alpha):
                term *= o ** a
            total += term
        result[alpha] = total
    return result


def _normalised_length(ideals, ns):
    d = ideals[0].dim
    if not any(ns):
        return 0
    P = MonomialIdeal([(0,) * d], d)
    for J, n in zip(ideals, ns):
        if n:
            P = ideal_product(P, power(J, n))
    return closure_colength(P)


def _basis_value(alpha, ns):
    v = 1
    for a, n in zip(alpha, ns):
        v *= binomial(n + a, a)
    return v


def mixed_from_fitting(ideals, seed=0, max_shift=3):
    """Fit the normalised length polynomial exactly and read off top coefficients."""
    d = ideals[0].dim
    g = len(ideals)
    basis = _bounded_indices(g, d)
    rng = random.Random(seed)
    for shift in range(max_shift + 1):
        nodes = [tuple(shift + x for x in m) for m in _bounded_indices(g, d)]
        values = [_normalised_length(ideals, ns) for ns in nodes]
        A = [[_basis_value(alpha, ns) for alpha in basis] for ns in nodes]
        coeffs = dict(zip(basis, solve(A, values)))
        node_set = set(nodes)
        pool = [tuple(shift + x for x in ns)
                for ns in cartesian(range(d + 2), repeat=g)]
        pool = [ns for ns in pool if ns not in node_set]
        checks = rng.sample(pool, min(2, len(pool)))
        ok = all(
            sum(c * _basis_value(alpha, ns) for alpha, c in coeffs.items())
            == _normalised_length(ideals, ns)
            for ns in checks
        )
        if ok:
            mixed = {}
            for alpha in multi_indices(g, d):
                c = coeffs[alpha]
                if c.denominator != 1:
                    raise NonPolynomialTail(f"non-integral coefficient {c} at {alpha}")
                mixed[alpha] = int(c)
            return mixed
    raise NonPolynomialTail("normalised lengths did not fit a polynomial of degree d")


def mixed_multiplicities(ideals, method="both", seed=0):
    """Mixed multiplicities of ``ideals``; see the module docstring."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    d = ideals[0].dim
    if any(J.dim != d for J in ideals):
        raise DimensionMismatch("ideals live in different dimensions")
    notices = []
    by_basis = None
    by_fit = None
    if method in ("both", "point_basis"):
        try:
            by_basis = mixed_from_point_bases(ideals)
        except NotFinitelySupported as exc:
            if method == "point_basis":
                raise
            notices.append(f"point-basis route skipped: {exc}")
    if method in ("both", "fitting") or by_basis is None:
        by_fit = mixed_from_fitting(ideals, seed=seed)
    discrepancies = []
    if by_basis is not None and by_fit is not None:
        for k in by_basis:
            if by_basis[k] != by_fit[k]:
                discrepancies.append({"index": list(k), "point_basis": by_basis[k],
                                      "fitting": by_fit[k]})
    if by_basis is not None and by_fit is not None:
        source = "both"
    else:
        source = "point_basis" if by_basis is not None else "fitting"
    mixed = by_basis if by_basis is not None else by_fit
    g = len(ideals)
    e = [mixed[tuple(d if k == j else 0 for k in range(g))] for j in range(g)]
    return MultReport(d, g, mixed, source, e, discrepancies, notices)


def pair_mixed(I, J, i, **kw):
    """e_i(I|J) = e_{d-i, i}(I, J)."""
    report = mixed_multiplicities([I, J], **kw)
    return report.mixed[(I.dim - i, i)]


def multiplicity(I, method="both"):
    """e(I), from the point basis (sum of o^d) and/or the Hilbert polynomial."""
    values = {}
    if method in ("both", "point_basis"):
        try:
            c = constellation(I)
            values["point_basis"] = sum(n.order ** I.dim for n in c.root.walk())
        except NotFinitelySupported:
            if method == "point_basis":
                raise
    if method in ("both", "fitting") or not values:
        values["fitting"] = hilbert_table(I).multiplicity
    distinct = set(values.values())
    if len(distinct) != 1:
        raise VerificationFailure(f"multiplicity routes disagree: {values}")
    return distinct.pop()


@dataclass
class FiberSeries:
    dim: int
    mu_values: list
    numerator: list

    def to_dict(self):
        return {"dim": self.dim, "mu": self.mu_values, "numerator": self.numerator}


def fiber_numerator(I, n_max=None):
    """Numerator h(t) of sum_n mu(I^n) t^n = h(t) / (1 - t)^d."""
    d = I.dim
    if n_max is None:
        n_max = d + 3
    mus = [1]
    P = MonomialIdeal([(0,) * d], d)
    for _ in range(n_max):
        P = ideal_product(P, I)
        mus.append(mu(P))
    h = []
    for k in range(n_max + 1):
        h.append(sum((-1) ** j * binomial(d, j) * mus[k - j]
                     for j in range(min(k, d) + 1)))
    top = max((k for k, c in enumerate(h) if c), default=0)
    if n_max - top < 2:
        raise NonPolynomialTail(
            f"numerator not confirmed: only {n_max - top} trailing zero terms up to n={n_max}")
    return FiberSeries(d, mus, h[:top + 1])
