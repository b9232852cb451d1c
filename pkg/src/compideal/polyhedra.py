"""Exact polyhedral primitives: phase-1 simplex and double description.

Everything here is integer or ``Fraction`` arithmetic; no floating point.
"""

from fractions import Fraction
from math import gcd


def lp_feasible(A, b):
    """Return a point x >= 0 with A x = b, or None if none exists.

    Phase-1 simplex with one artificial per row and Bland's rule, so it
    terminates on degenerate problems.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # Reduced costs of the phase-1 objective (sum of artificials).
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for k in range(n):
            cost[k] -= row[k]
        cost[width] -= row[width]
    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            break  # unbounded direction; cannot happen for phase 1
        piv = best[1]
        prow = rows[piv]
        pval = prow[enter]
        prow = [x / pval for x in prow]
        rows[piv] = prow
        for i, row in enumerate(rows):
            if i != piv and row[enter] != 0:
                f = row[enter]
                rows[i] = [x - f * y for x, y in zip(row, prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        basis[piv] = enter
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][width]
        elif rows[i][width] != 0:
            return None
    return x


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _solve_inverse_columns(B):
    """Columns of B^{-1} scaled to primitive integer vectors."""
    n = len(B)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(B)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    cols = []
    for j in range(n):
        col = [M[i][n + j] for i in range(n)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append(_primitive([int(x * den) for x in col]))
    return cols


def _independent_rows(rows, n):
    chosen = []
    basis = []
    for idx, row in enumerate(rows):
        vec = [Fraction(x) for x in row]
        for piv, brow in basis:
            if vec[piv] != 0:
                f = vec[piv]
                vec = [x - f * y for x, y in zip(vec, brow)]
        piv = next((k for k in range(n) if vec[k] != 0), None)
        if piv is None:
            continue
        pv = vec[piv]
        basis.append((piv, [x / pv for x in vec]))
        chosen.append(idx)
        if len(chosen) == n:
            break
    return chosen


def extreme_rays(rows):
    """Extreme rays of the pointed cone {y : r . y >= 0 for r in rows}.

    Double description method with the combinatorial adjacency test.
    ``rows`` must have full rank.  Returns primitive integer tuples.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    n = len(rows[0])
    start = _independent_rows(rows, n)
    if len(start) < n:
        raise ValueError("constraint rows do not have full rank")
    cols = _solve_inverse_columns([rows[i] for i in start])
    full = (1 << len(rows)) - 1
    # ray -> bitmask of tight constraints (indices into rows)
    rays = []
    for j, col in enumerate(cols):
        tight = 0
        for k, i in enumerate(start):
            if k != j:
                tight |= 1 << i
        rays.append((col, tight))
    done = set(start)
    for idx, g in enumerate(rows):
        if idx in done:
            continue
        bit = 1 << idx
        plus, zero, minus = [], [], []
        for ray, tight in rays:
            val = sum(a * b for a, b in zip(g, ray))
            if val > 0:
                plus.append((ray, tight, val))
            elif val < 0:
                minus.append((ray, tight, val))
            else:
                zero.append((ray, tight | bit))
        new = [(r, t) for r, t, _ in plus] + zero
        if minus:
            masks = [t for _, t in rays]
            for rp, tp, vp in plus:
                for rm, tm, vm in minus:
                    common = tp & tm
                    if bin(common).count("1") < n - 2:
                        continue
                    adjacent = True
                    for t in masks:
                        if t != tp and t != tm and (common & t) == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    w = tuple(vp * a - vm * b for a, b in zip(rm, rp))
                    new.append((_primitive(w), common | bit))
        rays = new
        done.add(idx)
    assert all(t != full for _, t in rays)
    return sorted({r for r, _ in rays})
