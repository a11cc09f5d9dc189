# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

Same signatures and results; character values are accumulated as Python
ints so they never overflow.
"""

from libc.stdlib cimport malloc, free


def mn_character(tuple lam, tuple mu, dict memo):
    return _chi(lam, mu, memo)


cdef object _chi(tuple lam, tuple mu, dict memo):
    cdef Py_ssize_t l = len(lam)
    if len(mu) == 0:
        return 1 if l == 0 else 0
    key = (lam, mu)
    cached = memo.get(key)
    if cached is not None:
        return cached

    cdef int r = mu[0]
    cdef tuple rest = mu[1:]
    cdef int *beta = <int *> malloc(l * sizeof(int))
    cdef int *nb = <int *> malloc(l * sizeof(int))
    cdef Py_ssize_t i, j, k, jumped, m
    cdef int b, t
    cdef bint hit
    total = 0
    try:
        for i in range(l):
            beta[i] = <int> lam[i] + <int> (l - 1 - i)
        for i in range(l):
            b = beta[i]
            t = b - r
            if t < 0:
                continue
            jumped = 0
            hit = False
            for j in range(i + 1, l):
                if beta[j] > t:
                    jumped += 1
                elif beta[j] == t:
                    hit = True
                    break
                else:
                    break
            if hit:
                continue
            m = 0
            for j in range(i):
                nb[m] = beta[j]
                m += 1
            for j in range(i + 1, i + 1 + jumped):
                nb[m] = beta[j]
                m += 1
            nb[m] = t
            m += 1
            for j in range(i + 1 + jumped, l):
                nb[m] = beta[j]
                m += 1
            k = l
            while k > 0 and nb[k - 1] - (l - k) == 0:
                k -= 1
            rem = tuple([nb[j] - (l - 1 - j) for j in range(k)])
            if jumped & 1:
                total -= _chi(rem, rest, memo)
            else:
                total += _chi(rem, rest, memo)
    finally:
        free(beta)
        free(nb)
    memo[key] = total
    return total


cdef struct LRState:
    int ncells
    int nvals
    int *row
    int *left
    int *up
    int *entry
    int *cnt
    int *weight
    int *base


cdef long long _lr_rec(LRState *s, int k) nogil:
    if k == s.ncells:
        return 1
    cdef int r = s.row[k]
    cdef int v, w, lo, hi
    cdef int *above = s.base + r * (s.nvals + 2)
    if k == 0 or s.row[k - 1] != r:
        for v in range(s.nvals + 2):
            above[v] = s.cnt[v]
    lo = 1
    if s.left[k] >= 0:
        lo = s.entry[s.left[k]]
    if s.up[k] >= 0 and s.entry[s.up[k]] >= lo:
        lo = s.entry[s.up[k]] + 1
    hi = s.nvals if s.nvals < r + 1 else r + 1
    cdef long long total = 0
    for w in range(lo, hi + 1):
        if s.cnt[w] >= s.weight[w - 1]:
            continue
        if w > 1 and above[w - 1] <= s.cnt[w]:
            continue
        s.entry[k] = w
        s.cnt[w] += 1
        total += _lr_rec(s, k + 1)
        s.cnt[w] -= 1
    return total


def lr_count(tuple outer, tuple inner, tuple weight):
    cdef Py_ssize_t nrows = len(outer)
    cdef int ncells = 0, i, j, start, k, v
    cdef int nvals = len(weight)
    for i in range(nrows):
        start = inner[i] if i < len(inner) else 0
        ncells += <int> outer[i] - start
    if ncells != sum(weight):
        return 0
    if ncells == 0:
        return 1

    cdef LRState s
    s.ncells = ncells
    s.nvals = nvals
    s.row = <int *> malloc(ncells * sizeof(int))
    s.left = <int *> malloc(ncells * sizeof(int))
    s.up = <int *> malloc(ncells * sizeof(int))
    s.entry = <int *> malloc(ncells * sizeof(int))
    s.cnt = <int *> malloc((nvals + 2) * sizeof(int))
    s.weight = <int *> malloc((nvals + 1) * sizeof(int))
    s.base = <int *> malloc(nrows * (nvals + 2) * sizeof(int))
    # index of the first cell in each row, used to link upper neighbours
    cdef int *row_first = <int *> malloc((nrows + 1) * sizeof(int))
    cdef int *row_start = <int *> malloc((nrows + 1) * sizeof(int))
    cdef long long result
    try:
        for v in range(nvals + 2):
            s.cnt[v] = 0
        for v in range(nvals):
            s.weight[v] = weight[v]
        k = 0
        for i in range(nrows):
            start = inner[i] if i < len(inner) else 0
            row_first[i] = k
            row_start[i] = start
            for j in range(start, <int> outer[i]):
                s.row[k] = i
                s.entry[k] = 0
                s.left[k] = k - 1 if j > start else -1
                if i > 0 and row_start[i - 1] <= j < <int> outer[i - 1]:
                    s.up[k] = row_first[i - 1] + (j - row_start[i - 1])
                else:
                    s.up[k] = -1
                k += 1
        with nogil:
            result = _lr_rec(&s, 0)
    finally:
        free(s.row)
        free(s.left)
        free(s.up)
        free(s.entry)
        free(s.cnt)
        free(s.weight)
        free(s.base)
        free(row_first)
        free(row_start)
    return result
