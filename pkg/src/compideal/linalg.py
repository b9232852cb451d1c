"""Exact rational linear algebra and polynomial helpers."""

from fractions import Fraction
from math import factorial


def solve(A, b):
    """Solve the square system A x = b over Q (raises if singular)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def sparse_rank(rows):
    """Rank of rows given as {column: value} dicts, over Q."""
    pivots = {}  # pivot column -> normalised row
    rank = 0
    for row in rows:
        vec = {k: Fraction(v) for k, v in row.items() if v}
        while vec:
            col = min(vec)
            if col not in pivots:
                pv = vec[col]
                pivots[col] = {k: v / pv for k, v in vec.items()}
                rank += 1
                break
            f = vec[col]
            for k, v in pivots[col].items():
                nv = vec.get(k, 0) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return rank


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def interpolate(xs, ys):
    """Coefficients (constant first) of the interpolating polynomial."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        den = Fraction(1)
        for j in range(n):
            if j != i:
                basis = poly_mul(basis, [Fraction(-xs[j]), Fraction(1)])
                den *= xs[i] - xs[j]
        for k, c in enumerate(basis):
            coeffs[k] += c * ys[i] / den
    return trim(coeffs)


def binomial_poly(shift, m):
    """C(n + shift, m) as a polynomial in n."""
    p = [Fraction(1)]
    for t in range(m):
        p = poly_mul(p, [Fraction(shift - t), Fraction(1)])
    f = factorial(m)
    return [c / f for c in p]
