"""Hoskin-Deligne sums, identity reports and Hilbert tables.

For a finitely supported monomial ideal I in d variables the colength of
its closure equals the sum over base points S of C(o(I^S) + d - 1, d).
For other ideals the gap between the two sides (the *defect*) is the
alternating sum of higher direct-image lengths; here it is only ever
computed as that residual, from lengths supplied by the caller or by the
Groebner engine.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .blowup import constellation
from .errors import InsufficientData, NonPolynomialTail
from .linalg import binomial_poly, interpolate, poly_eval, trim
from .monomial import binomial, is_mprimary
from .newton import closure_colength
from .errors import NotMPrimary


def hd_term(order, d):
    return binomial(order + d - 1, d)


def hd_sum(c, d=None):
    d = c.dim if d is None else d
    return sum(hd_term(n.order, d) for n in c.root.walk())


@dataclass
class HDReport:
    dim: int
    colength_closure: int
    hd_sum: int
    defect: int
    per_node: list = field(default_factory=list)
    transform_lengths: tuple = ()
    source: str = "monomial"

    @property
    def identity_holds(self):
        return self.defect == 0

    def to_dict(self):
        return {
            "dim": self.dim,
            "colength_closure": self.colength_closure,
            "hd_sum": self.hd_sum,
            "defect": self.defect,
            "identity_holds": self.identity_holds,
            "source": self.source,
            "transform_lengths": list(self.transform_lengths),
            "per_node": [
                {"path": None if p is None else list(p), "order": o, "term": t}
                for p, o, t in self.per_node
            ],
        }


def hd_check(I):
    """Both sides of the monomial length formula for I."""
    c = constellation(I)
    d = I.dim
    per_node = [(n.path, n.order, hd_term(n.order, d)) for n in c.root.walk()]
    total = sum(t for _, _, t in per_node)
    ell = closure_colength(I)
    return HDReport(d, ell, total, total - ell, per_node)


def defect_report(colength, orders, dim, transform_lengths=()):
    """Defect assembled from supplied data.

    ``orders`` are the orders at the base points that are listed explicitly;
    ``transform_lengths`` are colengths of transforms standing in for whole
    subtrees (each is the length of the local ring modulo the transform).
    """
    if colength is None or not orders:
        raise InsufficientData("need the colength and at least the root order")
    per_node = [(None, o, hd_term(o, dim)) for o in orders]
    total = sum(t for _, _, t in per_node) + sum(transform_lengths)
    return HDReport(dim, colength, total, total - colength, per_node,
                    tuple(transform_lengths), source="supplied")


def scaled_hd_sum(c, n):
    return sum(hd_term(n * node.order, c.dim) for node in c.root.walk())


@dataclass
class HilbertTable:
    dim: int
    samples: list
    fitted: list
    fit_valid_from: int

    def value(self, n):
        return poly_eval(self.fitted, n)

    @property
    def leading_coefficient(self):
        return self.fitted[-1]

    @property
    def multiplicity(self):
        e = self.leading_coefficient * factorial(self.dim)
        assert e.denominator == 1
        return int(e)

    def binomial_coefficients(self):
        """[e_0, ..., e_d] with P(n) = sum (-1)^i e_i C(n + d - 1 - i, d - i)."""
        d = self.dim
        rest = list(self.fitted) + [Fraction(0)] * (d + 1 - len(self.fitted))
        out = []
        for i in range(d + 1):
            basis = binomial_poly(d - 1 - i, d - i)
            top = d - i
            coeff = rest[top] / basis[top]
            out.append(coeff * (-1) ** i)
            rest = [r - coeff * (basis[k] if k < len(basis) else 0)
                    for k, r in enumerate(rest)]
        assert all(r == 0 for r in rest)
        return [int(c) if c.denominator == 1 else c for c in out]

    def to_dict(self):
        return {
            "dim": self.dim,
            "samples": self.samples,
            "fitted": [str(c) for c in self.fitted],
            "fit_valid_from": self.fit_valid_from,
            "multiplicity": self.multiplicity,
            "binomial_coefficients": [str(c) for c in self.binomial_coefficients()],
        }


def hilbert_table(I, n_max=None):
    """Exact samples of n -> colength(closure(I^n)) and their polynomial fit."""
    d = I.dim
    if not is_mprimary(I):
        raise NotMPrimary("Hilbert functions need an M-primary ideal")
    if n_max is None:
        n_max = d + 3
    if n_max < d + 2:
        raise ValueError(f"n_max must be at least d + 2 = {d + 2}")
    samples = [closure_colength(I, n) for n in range(n_max + 1)]
    xs = list(range(n_max - d, n_max + 1))
    fitted = trim(interpolate(xs, [samples[x] for x in xs]))
    if len(fitted) - 1 != d:
        raise NonPolynomialTail(f"fitted degree {len(fitted) - 1} differs from {d}")
    valid = n_max - d
    while valid > 0 and poly_eval(fitted, valid - 1) == samples[valid - 1]:
        valid -= 1
    if valid > n_max - d - 2:
        # Fewer than two samples confirm the fit outside the interpolation nodes.
        raise NonPolynomialTail("samples do not stabilise on a polynomial")
    return HilbertTable(d, samples, fitted, valid)
