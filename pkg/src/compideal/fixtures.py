"""The bundled example corpus and the checks run by ``compideal fixtures``."""

from dataclasses import dataclass
from importlib import resources

from . import groebner as gb
from .blowup import chart_transform, constellation, is_finitely_supported, point_basis
from .criteria import generator_bounds, lower_bound, mi_criterion
from .errors import NotFinitelySupported
from .hd import defect_report, hd_check, hilbert_table
from .monomial import MonomialIdeal, binomial, maximal_ideal, mu, order, power, product
from .multiplicities import fiber_numerator, mixed_multiplicities, multiplicity, pair_mixed
from .newton import closure, closure_colength, closure_power, mi_closedness, star_product
from .parsing import parse_ideal
from .reductions import lemma61_checks


def corpus_names():
    root = resources.files("compideal") / "corpus"
    return sorted(p.name[:-len(".ideal")] for p in root.iterdir()
                  if p.name.endswith(".ideal"))


def corpus_text(name):
    return (resources.files("compideal") / "corpus" / f"{name}.ideal").read_text()


def load(name):
    return parse_ideal(corpus_text(name))


@dataclass
class Check:
    example: str
    quantity: str
    expected: object
    actual: object

    @property
    def passed(self):
        return self.expected == self.actual

    def to_dict(self):
        return {"example": self.example, "quantity": self.quantity,
                "expected": self.expected, "actual": self.actual,
                "passed": self.passed}


def _raises(fn, exc):
    try:
        fn()
    except exc:
        return True
    return False


def checks_ex71():
    I = load("ex71").ideal
    J = load("ex71_J").ideal
    c = constellation(I)
    table = hilbert_table(I)
    hd = hd_check(I)
    red = lemma61_checks(I, J)
    mm = mixed_multiplicities([maximal_ideal(3), I])
    witness = mi_closedness(I).witness
    out = [
        ("mu", 11, mu(I)),
        ("order", 3, order(I)),
        ("finitely supported", True, is_finitely_supported(I).finitely_supported),
        ("constellation nodes", 7, c.node_count),
        ("point basis", [3, 2, 1, 1, 1, 1, 1], point_basis(c)),
        ("colength of closure", 19, closure_colength(I)),
        ("closure(I^n) colengths n=1..3", [19, 96, 271],
         [closure_colength(I, n) for n in (1, 2, 3)]),
        ("closure(I^n) = I^n for n <= 3", True,
         all(closure_power(I, n) == power(I, n) for n in (1, 2, 3))),
        ("closure(I) = I", True, closure(I) == I),
        ("Hilbert polynomial binomial coefficients", [40, 22, 1, 0],
         table.binomial_coefficients()),
        ("Hilbert function equals polynomial from n", 0, table.fit_valid_from),
        ("HD sum", 19, hd.hd_sum),
        ("HD defect", 0, hd.defect),
        ("e(I)", 40, multiplicity(I)),
        ("e(M|I) (e_1, e_2)", [3, 9], [mm.mixed[(2, 1)], mm.mixed[(1, 2)]]),
        ("fiber numerator", [1, 8], fiber_numerator(I).numerator),
        ("MI not closed", False, mi_closedness(I).closed),
        ("MI witness", (1, 2, 1), witness),
        ("mi criterion consistent", True, mi_criterion(I).criterion_consistent),
        ("bounds (lower, mu, upper)", [10, 11, 11],
         [generator_bounds(I).lower, mu(I), generator_bounds(I).upper]),
        ("mu = o^2 + 2", True, mu(I) == order(I) ** 2 + 2),
        ("J is a reduction", True, red.is_reduction),
        ("r_J", 2, red.r_J),
        ("l((J + I^2)/J)", 1, red.lemma61["lhs"]),
        ("sum C(o_S, 3)", 1, red.lemma61["rhs"]),
        ("r_J >= 2 at order 3", True, red.lemma61["high_order_check"]),
    ]
    return [Check("ex71", *row) for row in out]


def checks_ex72():
    I = load("ex72").ideal
    J = load("ex72_J").ideal
    T = gb.poly_transform(I, 0)
    lengths = gb.exceptional_lengths(I)
    ell = gb.gb_colength(I)
    rep = defect_report(ell, [I.order()], 3, [sum(lengths)])
    expected_T = gb.PolynomialIdeal([
        gb.Polynomial({(1, 0, 0): 1}, 3),
        gb.Polynomial({(0, 3, 0): 1, (0, 0, 1): -1}, 3),
        gb.Polynomial({(0, 0, 3): 1}, 3)])
    out = [
        ("l(R/I)", 18, ell),
        ("l(S/I^S), chart x", 9, gb.gb_colength(T)),
        ("chart x transform = (x, u^3 - v, v^3)", True, gb.ideals_equal(T, expected_T)),
        ("C(o+2, 3)", 10, binomial(I.order() + 2, 3)),
        ("HD sum", 19, rep.hd_sum),
        ("defect", 1, rep.defect),
        ("J I = I^2", True, gb.ideals_equal(gb.ideal_product(J, I), gb.ideal_power(I, 2))),
        ("J inside I", True, gb.is_subideal(J, I)),
    ]
    return [Check("ex72", *row) for row in out]


def checks_ex73(r=3):
    I = load("ex73_r3").ideal
    J = load("ex73_r3_J").ideal
    w = load("ex73_r3_witness").ideal.gens[0]
    ell = gb.gb_colength(I)
    lengths = gb.exceptional_lengths(I)
    o = I.order()
    rep = defect_report(ell, [o], 3, [sum(lengths)])
    I2 = gb.ideal_power(I, 2)
    out = [
        ("l(R/I) = C(r+3,3) + C(r+3,2) - 4", binomial(r + 3, 3) + binomial(r + 3, 2) - 4, ell),
        ("l(S/I^S) + C(o+2,3) = 2 C(r+1,2) + C(r+3,3)",
         2 * binomial(r + 1, 2) + binomial(r + 3, 3), lengths[1] + binomial(o + 2, 3)),
        ("defect = C(r-1, 2)", binomial(r - 1, 2), rep.defect),
        ("witness in J", True, gb.member(w, J)),
        ("witness in I^3", True, gb.member(w, gb.ideal_power(I, 3))),
        ("witness not in J I^2", False, gb.member(w, gb.ideal_product(J, I2))),
    ]
    return [Check("ex73_r3", *row) for row in out]


def checks_ex74():
    I1 = load("ex74_I1").ideal
    I2 = load("ex74_I2").ideal
    P = load("ex74_product").ideal
    M = maximal_ideal(3)
    fit = mixed_multiplicities([M, I1, I2], method="fitting")
    e_prod = pair_mixed(M, P, 2, method="fitting")
    e1 = pair_mixed(M, I1, 2, method="fitting")
    e2 = pair_mixed(M, I2, 2, method="fitting")
    e111 = fit.mixed[(1, 1, 1)]
    report = mi_criterion(I1)
    out = [
        ("product generators", sorted(P.gens), sorted(product(I1, I2).gens)),
        ("mu(I1 I2)", 7, mu(P)),
        ("I1 I2 not finitely supported", True,
         _raises(lambda: constellation(P), NotFinitelySupported)),
        ("I1 not finitely supported", False, is_finitely_supported(I1).finitely_supported),
        ("chart y transform of I1 is not M-primary", True,
         chart_transform(I1, 1).pure_powers()[2] is None),
        ("e_2(M|I1)", 2, e1),
        ("e_2(M|I2)", 1, e2),
        ("e_{1,1,1}(M,I1,I2)", 1, e111),
        ("e_2(M|I1 I2)", 5, e_prod),
        ("additivity", e_prod, e1 + e2 + 2 * e111),
        ("o(I1 I2)^2 < e_2", True, order(P) ** 2 < e_prod),
        ("mu(I1 I2) > o^2 + 2", True, mu(P) > order(P) ** 2 + 2),
        ("M I1 closed", True, report.mi_closed),
        ("mu(I1) = 4 > 3", [4, 3], [mu(I1), lower_bound(order(I1), 3)]),
        ("criterion reported inapplicable", False, report.applicable),
    ]
    return [Check("ex74", *row) for row in out]


def checks_misc():
    A = MonomialIdeal([(2, 0), (0, 2)])
    B = MonomialIdeal([(1, 0), (0, 1)])
    out = [
        ("star product respects closures", list(star_product(closure(A), closure(B)).gens),
         list(star_product(A, B).gens)),
    ]
    return [Check("misc", *row) for row in out]


def run_all():
    checks = []
    for fn in (checks_ex71, checks_ex72, checks_ex73, checks_ex74, checks_misc):
        checks.extend(fn())
    return checks
