"""Reductions of the filtration n -> closure(I^n) for a monomial ideal I.

A d-generated J inside closure(I) is a reduction when
J * closure(I^n) = closure(I^(n+1)) for large n; r_J is the largest n with
J * closure(I^(n-1)) != closure(I^n) (0 if there is none).

Each level is decided exactly.  The default test works in the vector space
closure(I^(n+1)) / M closure(I^(n+1)), whose basis is the set of minimal
monomial generators: by Nakayama, J * closure(I^n) fills closure(I^(n+1))
iff the images of the products j * m (m a minimal generator of
closure(I^n)) span that space.  The Groebner route tests membership of
every minimal generator directly and serves as a cross-check.
"""

import random
from dataclasses import dataclass, field

from .blowup import constellation
from .errors import HypothesisFails, NotContained, WrongGeneratorCount
from .groebner import (
    Polynomial,
    PolynomialIdeal,
    ideal_sum,
    local_colength,
    member,
    truncated_colength,
)
from .hd import hd_term
from .linalg import sparse_rank
from .monomial import binomial, contains, mono_mul, order, standard_monomials
from .newton import closure, closure_colength, closure_power

DEFAULT_N_MAX = 6


@dataclass
class ReductionReport:
    J: PolynomialIdeal
    is_reduction: bool  # True, or None when still unresolved at n_max
    r_J: int
    n_max: int
    levels: list = field(default_factory=list)
    method: str = "rank"
    lemma61: dict = None

    @property
    def status(self):
        return "reduction" if self.is_reduction else "inconclusive"

    def to_dict(self):
        return {
            "J": [g.to_str() for g in self.J.gens],
            "is_reduction": self.is_reduction,
            "status": self.status,
            "r_J": self.r_J,
            "n_max": self.n_max,
            "levels": [{"n": n, "equal": eq} for n, eq in self.levels],
            "method": self.method,
            "lemma61": self.lemma61,
        }


def _check_input(J, I):
    d = I.dim
    if J.dim != d:
        raise WrongGeneratorCount(f"J lives in dimension {J.dim}, I in {d}")
    if len(J.gens) != d:
        raise WrongGeneratorCount(f"J needs exactly {d} generators, got {len(J.gens)}")
    bar = closure(I)
    for g in J.gens:
        for e in g.terms:
            if not contains(bar, e):
                raise NotContained(f"term {e} of {g.to_str()} is not in the closure of I")
    return bar


def _level_rank(J, n, I):
    """J * closure(I^n) == closure(I^(n+1)) via the Nakayama rank test."""
    lower = closure_power(I, n)
    upper = closure_power(I, n + 1)
    column = {m: k for k, m in enumerate(upper.gens)}
    rows = []
    for j in J.gens:
        for m in lower.gens:
            row = {}
            for e, c in j.terms.items():
                k = column.get(mono_mul(e, m))
                if k is not None:
                    row[k] = row.get(k, 0) + c
            if any(row.values()):
                rows.append(row)
    return sparse_rank(rows) == len(upper.gens)


def _level_groebner(J, n, I):
    lower = closure_power(I, n)
    upper = closure_power(I, n + 1)
    prod = PolynomialIdeal([j.mul_term(m) for j in J.gens for m in lower.gens], I.dim)
    return all(member(Polynomial.monomial(m), prod) for m in upper.gens)


def is_reduction(J, I, n_max=DEFAULT_N_MAX, method="rank"):
    """Test J * closure(I^n) = closure(I^(n+1)) for n = 0..n_max."""
    _check_input(J, I)
    test = {"rank": _level_rank, "groebner": _level_groebner}[method]
    levels = [(n, test(J, n, I)) for n in range(n_max + 1)]
    failing = [n + 1 for n, eq in levels if not eq]
    resolved = levels[-1][1]
    r = max(failing, default=0)
    return ReductionReport(J, True if resolved else None, r, n_max, levels, method)


def _hypothesis(I, c, n_max):
    for n in range(1, n_max + 1):
        lhs = closure_colength(I, n)
        rhs = sum(hd_term(n * node.order, 3) for node in c.root.walk())
        if lhs != rhs:
            raise HypothesisFails(
                f"length formula fails at n={n}: {lhs} != {rhs}")


def lemma61_checks(I, J, n_max=3, reduction_n_max=DEFAULT_N_MAX):
    """Numerical content of the d = 3 Cohen-Macaulay criterion for J."""
    if I.dim != 3:
        raise HypothesisFails("the criterion is stated for d = 3")
    c = constellation(I)
    _hypothesis(I, c, n_max)
    report = is_reduction(J, I, reduction_n_max)
    bar2 = closure_power(I, 2)
    ell_J = local_colength(J)
    # every monomial of degree past the staircase of closure(I^2) lies in it
    top = max(sum(m) for m in standard_monomials(bar2)) + 1
    lhs = ell_J - truncated_colength(ideal_sum(J, PolynomialIdeal.from_monomial(bar2)), top)
    rhs = sum(binomial(node.order, 3) for node in c.root.walk())
    o = order(closure(I))
    record = {
        "lhs": lhs,
        "rhs": rhs,
        "cm_iff": lhs == rhs,
        "order": o,
        "colength_J": ell_J,
        "r_J": report.r_J,
        "depth_criterion": report.is_reduction is True and report.r_J <= 2,
        "low_order_check": (lhs == rhs) if o <= 2 else None,
        "high_order_check": (report.r_J >= 2) if o >= 3 else None,
    }
    report.lemma61 = record
    return report


def find_minimal_reduction(I, seed=0, attempts=20, n_max=DEFAULT_N_MAX, bound=5):
    """Random small-integer combinations of generators of closure(I) until one works."""
    bar = closure(I)
    d = I.dim
    rng = random.Random(seed)
    for _ in range(attempts):
        gens = []
        for _ in range(d):
            terms = {m: rng.randint(1, bound) for m in bar.gens}
            gens.append(Polynomial(terms, d))
        J = PolynomialIdeal(gens, d)
        report = is_reduction(J, I, n_max)
        if report.is_reduction:
            return report
    return None

