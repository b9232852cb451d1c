# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef long long* _pack(rows, int ncols) except NULL:
    cdef Py_ssize_t n = len(rows)
    cdef long long* buf = <long long*> malloc((n * ncols + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef int k
    for i in range(n):
        row = rows[i]
        for k in range(ncols):
            buf[i * ncols + k] = row[k]
    return buf


def staircase_count(gens, bounds):
    cdef int d = len(bounds)
    cdef int n = len(gens)
    cdef int i, k, ok
    cdef long long cap, total = 0
    for b in bounds:
        if b <= 0:
            return 0
    cdef long long* G = _pack(gens, d)
    cdef long long* B = _pack([bounds], d)
    cdef long long* p = <long long*> malloc(d * sizeof(long long))
    cdef long long* gi
    try:
        for k in range(d):
            p[k] = 0
        while True:
            cap = B[d - 1]
            for i in range(n):
                gi = G + i * d
                if gi[d - 1] < cap:
                    ok = 1
                    for k in range(d - 1):
                        if gi[k] > p[k]:
                            ok = 0
                            break
                    if ok:
                        cap = gi[d - 1]
            total += cap
            k = 0
            while k < d - 1:
                p[k] += 1
                if p[k] < B[k]:
                    break
                p[k] = 0
                k += 1
            if k >= d - 1:
                break
    finally:
        free(G)
        free(B)
        free(p)
    return total


cdef inline int _is_member(long long* dots, long long* R, int m) nogil:
    cdef int f
    for f in range(m):
        if dots[f] < R[f]:
            return 0
    return 1


cdef inline int _is_member_shift(long long* dots, long long* A, long long* R,
                                 int m, int d, int j) nogil:
    cdef int f
    for f in range(m):
        if dots[f] - A[f * d + j] < R[f]:
            return 0
    return 1


cdef int _advance(long long* p, long long* B, long long* dots, long long* A,
                  int m, int d) nogil:
    """Odometer step with incremental dot products; 0 when exhausted."""
    cdef int k = d - 1, f
    while k >= 0:
        p[k] += 1
        if p[k] < B[k]:
            for f in range(m):
                dots[f] += A[f * d + k]
            return 1
        for f in range(m):
            dots[f] -= A[f * d + k] * (B[k] - 1)
        p[k] = 0
        k -= 1
    return 0


def np_count_outside(normals, rhs, bounds):
    cdef int d = len(bounds)
    cdef int m = len(normals)
    cdef long long count = 0
    for b in bounds:
        if b <= 0:
            return 0
    cdef long long* A = _pack(normals, d)
    cdef long long* R = _pack([rhs], m) if m else _pack([[0]], 1)
    cdef long long* B = _pack([bounds], d)
    cdef long long* p = <long long*> malloc(d * sizeof(long long))
    cdef long long* dots = <long long*> malloc((m + 1) * sizeof(long long))
    cdef int k
    try:
        for k in range(d):
            p[k] = 0
        for k in range(m):
            dots[k] = 0
        with nogil:
            while True:
                if not _is_member(dots, R, m):
                    count += 1
                if not _advance(p, B, dots, A, m, d):
                    break
    finally:
        free(A)
        free(R)
        free(B)
        free(p)
        free(dots)
    return count


def np_minimal_points(normals, rhs, bounds):
    cdef int d = len(bounds)
    cdef int m = len(normals)
    for b in bounds:
        if b <= 0:
            return []
    cdef long long* A = _pack(normals, d)
    cdef long long* R = _pack([rhs], m) if m else _pack([[0]], 1)
    cdef long long* B = _pack([bounds], d)
    cdef long long* p = <long long*> malloc(d * sizeof(long long))
    cdef long long* dots = <long long*> malloc((m + 1) * sizeof(long long))
    cdef int k, j, minimal
    out = []
    try:
        for k in range(d):
            p[k] = 0
        for k in range(m):
            dots[k] = 0
        while True:
            if _is_member(dots, R, m):
                minimal = 1
                for j in range(d):
                    if p[j] > 0 and _is_member_shift(dots, A, R, m, d, j):
                        minimal = 0
                        break
                if minimal:
                    out.append(tuple([p[k] for k in range(d)]))
            if not _advance(p, B, dots, A, m, d):
                break
    finally:
        free(A)
        free(R)
        free(B)
        free(p)
        free(dots)
    return out
