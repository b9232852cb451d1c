"""Generator-count bounds and the integral-closedness criterion for M*I.

For a finitely supported complete ideal I of order o in d variables:

    C(o + d - 1, d - 1) <= mu(I) <= o^(d-i) + d - i + (i - 1) * l(R/I)

for i = 1, ..., d - 1.  When I is moreover monomial and d >= 3, M*I is
integrally closed exactly when mu(I) reaches the lower bound.  The
criterion is never used as a shortcut: :func:`mi_criterion` always runs
the direct closure test next to it.
"""

from dataclasses import dataclass, field

from .blowup import is_finitely_supported
from .errors import HypothesisViolation, NotMPrimary
from .monomial import binomial, colength, is_mprimary, maximal_ideal, mu, order, product
from .newton import closure, mi_closedness


@dataclass
class CriteriaReport:
    dim: int
    order: int
    mu: int
    lower: int
    upper: int
    general_upper: dict = field(default_factory=dict)
    mi_closed: bool = None
    witness: tuple = None
    length_drop: int = None
    bounds_hold: bool = None
    criterion_consistent: bool = None
    applicable: bool = True
    hypothesis_notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "dim": self.dim,
            "order": self.order,
            "mu": self.mu,
            "lower": self.lower,
            "upper": self.upper,
            "general_upper": {str(k): v for k, v in self.general_upper.items()},
            "mi_closed": self.mi_closed,
            "witness": None if self.witness is None else list(self.witness),
            "length_drop": self.length_drop,
            "bounds_hold": self.bounds_hold,
            "criterion_consistent": self.criterion_consistent,
            "applicable": self.applicable,
            "hypothesis_notes": self.hypothesis_notes,
        }


def lower_bound(o, d):
    return binomial(o + d - 1, d - 1)


def upper_bound(o, d, i=1, ell=0):
    return o ** (d - i) + d - i + (i - 1) * ell


def _support_note(I):
    check = is_finitely_supported(I)
    if check.finitely_supported:
        return None
    return (f"not finitely supported (chart path {list(check.path)}, "
            f"coordinate {check.direction})")


def generator_bounds(I):
    """Bounds on mu of the closure of I, checked when they apply."""
    if not is_mprimary(I):
        raise NotMPrimary("generator bounds need an M-primary ideal")
    notes = []
    bar = closure(I)
    if bar != I:
        notes.append("input was not integrally closed; bounds evaluated on its closure")
    d = bar.dim
    o = order(bar)
    m = mu(bar)
    ell = colength(bar)
    general = {i: upper_bound(o, d, i, ell) for i in range(1, d)}
    report = CriteriaReport(d, o, m, lower_bound(o, d), upper_bound(o, d),
                            general, hypothesis_notes=notes)
    note = _support_note(bar)
    if note:
        report.applicable = False
        notes.append(note + "; bounds are not guaranteed")
    report.bounds_hold = report.lower <= m and all(m <= b for b in general.values())
    return report


def length_drop(I):
    """l(closure(I) / closure(M * closure(I))) as a difference of colengths."""
    bar = closure(I)
    MI = product(maximal_ideal(bar.dim), bar)
    return colength(closure(MI)) - colength(bar)


def mi_criterion(I, strict=False):
    """Direct closure test of M*I next to the generator-count criterion."""
    if not is_mprimary(I):
        raise NotMPrimary("the criterion needs an M-primary ideal")
    d = I.dim
    o = order(I)
    notes = []
    if d < 3:
        notes.append("dimension below 3: the criterion is stated for d >= 3")
    if closure(I) != I:
        notes.append("ideal is not integrally closed")
    note = _support_note(I)
    if note:
        notes.append(note)
    if strict and notes:
        raise HypothesisViolation("; ".join(notes))
    direct = mi_closedness(I)
    m = mu(I)
    low = lower_bound(o, d)
    report = CriteriaReport(d, o, m, low, upper_bound(o, d),
                            {i: upper_bound(o, d, i, colength(I)) for i in range(1, d)},
                            mi_closed=direct.closed, witness=direct.witness,
                            length_drop=length_drop(I),
                            applicable=not notes, hypothesis_notes=notes)
    report.bounds_hold = low <= m <= report.upper
    report.criterion_consistent = direct.closed == (m == low)
    return report
