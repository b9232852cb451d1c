"""Pure-Python lattice kernels.

Reference implementations of the box scans behind colength and integral
closure.  ``_ckernels.pyx`` mirrors these signatures exactly; the
dispatcher in :mod:`compideal.kernels` picks one at import time.

Conventions shared by both backends:

* ``gens`` is a sequence of exponent tuples, ``bounds`` a tuple of
  non-negative ints; the box is ``[0, bounds[0]) x ... x [0, bounds[-1])``.
* A Newton polyhedron is given by ``normals`` (integer rows) and ``rhs``:
  a lattice point ``v >= 0`` is a member iff ``dot(normals[f], v) >= rhs[f]``
  for every ``f``.
"""

from itertools import product


def staircase_count(gens, bounds):
    """Count the box points that no generator divides."""
    d = len(bounds)
    if any(b <= 0 for b in bounds):
        return 0
    last = bounds[-1]
    head = d - 1
    # Only generators that can cap the last coordinate matter.
    gens = sorted({tuple(g) for g in gens if g[-1] < last}, key=lambda g: g[-1])
    total = 0
    for prefix in product(*(range(b) for b in bounds[:-1])):
        cap = last
        for g in gens:
            if g[-1] >= cap:
                break
            for k in range(head):
                if g[k] > prefix[k]:
                    break
            else:
                cap = g[-1]
                break
        total += cap
    return total


def _members(normals, rhs):
    facets = list(zip(normals, rhs))

    def member(v):
        for a, b in facets:
            s = 0
            for ak, vk in zip(a, v):
                s += ak * vk
            if s < b:
                return False
        return True

    return member


def np_count_outside(normals, rhs, bounds):
    """Count box points lying outside the polyhedron."""
    if any(b <= 0 for b in bounds):
        return 0
    member = _members(normals, rhs)
    return sum(1 for v in product(*(range(b) for b in bounds)) if not member(v))


def np_minimal_points(normals, rhs, bounds):
    """Divisibility-minimal box points of the polyhedron, in scan order."""
    if any(b <= 0 for b in bounds):
        return []
    member = _members(normals, rhs)
    d = len(bounds)
    out = []
    for v in product(*(range(b) for b in bounds)):
        if not member(v):
            continue
        for j in range(d):
            if v[j] > 0:
                w = v[:j] + (v[j] - 1,) + v[j + 1:]
                if member(w):
                    break
        else:
            out.append(v)
    return out
