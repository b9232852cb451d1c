"""A small exact Groebner engine over Q (degrevlex only).

Enough to compute colengths of zero-dimensional ideals, ideal membership,
products and chart transforms of polynomial ideals.  Coefficients are
``Fraction``; S-pairs are processed with the normal strategy (least lcm
first, ties by pair index) and pruned with the Gebauer-Moeller criteria,
so repeated runs give identical bases.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import DegreeBlowup, DimensionMismatch, NotZeroDimensional
from .linalg import sparse_rank
from .monomial import (
    MonomialIdeal,
    canonical_key,
    colength,
    divides,
    mono_lcm,
    mono_mul,
    max_ideal_power,
)

DEFAULT_MAX_DEGREE = 60


class Polynomial:
    """Sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("dim", "terms", "_lm")

    def __init__(self, terms, dim):
        self.dim = dim
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != dim:
                raise DimensionMismatch(f"term {e} does not have length {dim}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._lm = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def constant(cls, c, dim):
        return cls({(0,) * dim: c}, dim)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(out, self.dim)

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()}, self.dim)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = Fraction(other)
            if not other:
                return _raw({}, self.dim)
            return _raw({e: c * other for e, c in self.terms.items()}, self.dim)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return _raw(out, self.dim)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial.constant(1, self.dim)
        for _ in range(n):
            result = result * self
        return result

    def mul_term(self, exp, coeff=1):
        return _raw({mono_mul(e, exp): c * coeff for e, c in self.terms.items()}, self.dim)

    @property
    def lm(self):
        if self._lm is None:
            self._lm = max(self.terms, key=canonical_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def monic(self):
        return self * (1 / self.lc)

    def total_degree(self):
        return max(sum(e) for e in self.terms)

    def order(self):
        """Least degree of a term (the order at the origin)."""
        return min(sum(e) for e in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: canonical_key(t[0]), reverse=True)

    def to_str(self, names=None):
        names = names or default_names(self.dim)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for n, k in zip(names, e):
                if k == 1:
                    factors.append(n)
                elif k > 1:
                    factors.append(f"{n}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _raw(terms, dim):
    p = Polynomial.__new__(Polynomial)
    p.dim = dim
    p.terms = terms
    p._lm = None
    return p


def default_names(d):
    if d <= 3:
        return ["x", "y", "z"][:d]
    return [f"x{i + 1}" for i in range(d)]


class PolynomialIdeal:
    """Ideal given by generators; the reduced basis is computed once and cached."""

    def __init__(self, gens, dim=None):
        gens = [g for g in gens if g]
        if dim is None:
            if not gens:
                raise ValueError("cannot infer the dimension of the zero ideal")
            dim = gens[0].dim
        if any(g.dim != dim for g in gens):
            raise DimensionMismatch("generators live in different dimensions")
        self.dim = dim
        self.gens = tuple(gens)
        self._gb = None

    def __repr__(self):
        return f"PolynomialIdeal([{', '.join(g.to_str() for g in self.gens)}])"

    @classmethod
    def from_monomial(cls, I):
        return cls([Polynomial.monomial(g) for g in I.gens], I.dim)

    def groebner_basis(self, max_degree=DEFAULT_MAX_DEGREE):
        if self._gb is None:
            self._gb = tuple(buchberger(self.gens, max_degree=max_degree))
        return self._gb

    def order(self):
        return min(g.order() for g in self.gens)

    def is_monomial(self):
        return all(g.is_monomial() for g in self.gens)

    def to_monomial(self):
        return MonomialIdeal([g.lm for g in self.gens], self.dim)


def normal_form(f, G):
    """Full reduction of f by the list G (leading coefficients 1)."""
    p = dict(f.terms)
    rem = {}
    leads = [(g.lm, g) for g in G]
    while p:
        m = max(p, key=canonical_key)
        c = p[m]
        for lm, g in leads:
            if divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for e, a in g.terms.items():
                    t = mono_mul(e, shift)
                    v = p.get(t, 0) - c * a
                    if v:
                        p[t] = v
                    else:
                        del p[t]
                break
        else:
            rem[m] = c
            del p[m]
    return _raw(rem, f.dim)


def _spoly(f, g):
    lcm = mono_lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, f.lm)))
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, g.lm)))
    return a - b


def _update(G, pairs, h_index):
    """Gebauer-Moeller update when G[h_index] joins the basis."""
    h = G[h_index].lm
    # B_k: drop old pairs whose lcm is strictly divisible by lm(h) in the GM sense.
    kept = set()
    for (i, j) in pairs:
        lij = mono_lcm(G[i].lm, G[j].lm)
        if (divides(h, lij) and lij != mono_lcm(G[i].lm, h)
                and lij != mono_lcm(G[j].lm, h)):
            continue
        kept.add((i, j))
    by_lcm = {}
    for i in range(h_index):
        if G[i] is None:
            continue
        by_lcm.setdefault(mono_lcm(G[i].lm, h), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=canonical_key):
        if not any(divides(L2, L) for L2 in minimal):
            minimal.append(L)
    for L in minimal:
        idxs = by_lcm[L]
        # Product criterion: coprime leading monomials give a zero S-polynomial.
        if any(L == mono_mul(G[i].lm, h) for i in idxs):
            continue
        kept.add((min(idxs), h_index))
    return kept


def buchberger(gens, max_degree=DEFAULT_MAX_DEGREE):
    """Reduced degrevlex Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    dim = gens[0].dim
    # Process generators from small to large leading monomial for determinism.
    start = sorted((g.monic() for g in gens), key=lambda g: canonical_key(g.lm))
    G = []
    pairs = set()
    for f in start:
        r = normal_form(f, [g for g in G if g is not None])
        if not r:
            continue
        G.append(r.monic())
        pairs = _update(G, pairs, len(G) - 1)
    while pairs:
        i, j = min(pairs, key=lambda p: (canonical_key(mono_lcm(G[p[0]].lm, G[p[1]].lm)), p))
        pairs.discard((i, j))
        lcm = mono_lcm(G[i].lm, G[j].lm)
        if sum(lcm) > max_degree:
            raise DegreeBlowup(f"S-pair of degree {sum(lcm)} exceeds the guard {max_degree}")
        r = normal_form(_spoly(G[i], G[j]), [g for g in G if g is not None])
        if not r:
            continue
        G.append(r.monic())
        pairs = _update(G, pairs, len(G) - 1)
    return _reduce_basis([g for g in G if g is not None], dim)


def _reduce_basis(G, dim):
    G = sorted(G, key=lambda g: canonical_key(g.lm))
    minimal = []
    for g in G:
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = _raw({e: c for e, c in g.terms.items() if e != g.lm}, dim)
        r = normal_form(tail, others)
        reduced.append((_raw({g.lm: Fraction(1)}, dim) + r * (1 / g.lc)))
    return sorted(reduced, key=lambda g: canonical_key(g.lm))


def leading_ideal(I):
    gb = I.groebner_basis()
    return MonomialIdeal([g.lm for g in gb], I.dim)


def gb_colength(I):
    """dim_Q of R/I, counted as standard monomials of the reduced basis."""
    lt = leading_ideal(I)
    if lt.is_unit:
        return 0
    pure = lt.pure_powers()
    if any(p is None for p in pure):
        raise NotZeroDimensional("leading ideal lacks a pure power of some variable")
    return colength(lt)


def member(f, I):
    return not normal_form(f, list(I.groebner_basis()))


def ideal_product(I, J):
    if I.dim != J.dim:
        raise DimensionMismatch("ideals live in different dimensions")
    return PolynomialIdeal([a * b for a in I.gens for b in J.gens], I.dim)


def ideal_sum(I, J):
    if I.dim != J.dim:
        raise DimensionMismatch("ideals live in different dimensions")
    return PolynomialIdeal(list(I.gens) + list(J.gens), I.dim)


def ideal_power(I, n):
    result = PolynomialIdeal([Polynomial.constant(1, I.dim)], I.dim)
    for _ in range(n):
        result = ideal_product(result, I)
    return result


def is_subideal(I, J):
    """I contained in J (all generators of I reduce to zero modulo J)."""
    G = list(J.groebner_basis())
    return all(not normal_form(g, G) for g in I.gens)


def ideals_equal(I, J):
    return I.groebner_basis() == J.groebner_basis()


def poly_transform(I, chart, order=None):
    """Transform of I in chart ``chart`` (0-based): substitute, divide by x_i^o."""
    if not 0 <= chart < I.dim:
        raise IndexError(f"chart {chart} out of range for dimension {I.dim}")
    o = I.order() if order is None else order
    gens = []
    for f in I.gens:
        terms = {}
        for e, c in f.terms.items():
            new = list(e)
            new[chart] = sum(e) - o
            # Holds whenever o does not exceed the ideal's order.
            assert new[chart] >= 0, "transform exponent went negative"
            terms[tuple(new)] = c
        gens.append(Polynomial(terms, I.dim))
    return PolynomialIdeal(gens, I.dim)


def with_max_power(I, n):
    return ideal_sum(I, PolynomialIdeal.from_monomial(max_ideal_power(I.dim, n)))


def truncated_colength(I, n):
    """l(R/(I + M^n)), by linear algebra in the truncated ring R/M^n."""
    d = I.dim
    column = {m: k for k, m in enumerate(max_ideal_power_monomials_below(d, n))}
    rows = []
    for f in I.gens:
        for shift in max_ideal_power_monomials_below(d, n - f.order()):
            row = {}
            for e, c in f.terms.items():
                k = column.get(mono_mul(e, shift))
                if k is not None:
                    row[k] = c
            if row:
                rows.append(row)
    return len(column) - sparse_rank(rows)


def max_ideal_power_monomials_below(d, n):
    """All exponent vectors of total degree < n, by degree."""
    out = []
    for k in range(max(n, 0)):
        for combo in combinations_with_replacement(range(d), k):
            e = [0] * d
            for j in combo:
                e[j] += 1
            out.append(tuple(e))
    return out


def local_colength(I, start=1):
    """Length of R_M / I_M at the origin.

    l(R/(I + M^N)) increases with N, and once two consecutive values agree
    M^N lies in I_M + M^(N+1), hence in I_M by Nakayama; that common value
    is the local length.
    """
    prev = truncated_colength(I, start)
    n = start + 1
    while True:
        cur = truncated_colength(I, n)
        if cur == prev:
            return cur
        prev = cur
        n += 1


def exceptional_lengths(I, order=None):
    """Colength of the transform at the base points on the first exceptional divisor.

    Each point of the divisor is counted once, in the first chart i whose
    coordinate is nonzero there; in chart i that means the remaining
    coordinates y_j (j < i) vanish, so chart i contributes the length of
    S_i / (I^{S_i} + (y_j : j < i)^N) for large N.  Returns one entry per chart.
    """
    d = I.dim
    out = []
    for i in range(d):
        T = poly_transform(I, i, order)
        if not T.groebner_basis() or T.groebner_basis()[0].lm == (0,) * d:
            out.append(0)
            continue
        total = gb_colength(T)
        if i == 0 or total == 0:
            out.append(total)
            continue
        # Each point has local length <= total, so (y_j : j < i)^(total+1)
        # vanishes exactly at the points on y_j = 0 without cutting them down.
        extra = []
        for combo in combinations_with_replacement(range(i), total + 1):
            e = [0] * d
            for j in combo:
                e[j] += 1
            extra.append(Polynomial.monomial(e))
        out.append(gb_colength(PolynomialIdeal(list(T.gens) + extra, d)))
    return out
