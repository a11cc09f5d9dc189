"""Pure-Python hot kernels: border-strip character recursion and LR tableau search.

Partitions are passed as plain tuples of ints; callers in the public
modules do the validation.
"""

from __future__ import annotations

from typing import Iterator


def strip_removals(lam: tuple, r: int) -> Iterator[tuple[tuple, int]]:
    """Yield ``(remainder, sign)`` for every border strip of length ``r`` in ``lam``.

    Works on beta-numbers b_i = lam_i + (l - 1 - i): removing an r-strip
    slides one bead from b to b - r onto an empty position, and the number
    of beads jumped over is the strip height minus one. Strips are yielded
    by starting row, ascending.
    """
    l = len(lam)
    beta = [lam[i] + l - 1 - i for i in range(l)]
    occupied = set(beta)
    for i in range(l):
        b = beta[i]
        t = b - r
        if t < 0 or t in occupied:
            continue
        jumped = 0
        for c in beta[i + 1:]:
            if c > t:
                jumped += 1
            else:
                break
        new_beta = beta[:i] + beta[i + 1:i + 1 + jumped] + [t] + beta[i + 1 + jumped:]
        rem = [x - (l - 1 - k) for k, x in enumerate(new_beta)]
        while rem and rem[-1] == 0:
            rem.pop()
        yield tuple(rem), (-1 if jumped % 2 else 1)


def mn_character(lam: tuple, mu: tuple, memo: dict) -> int:
    """chi_lam(mu) by peeling strips of length mu[0], mu[1], ... in turn.

    ``memo`` maps ``(lam, mu)`` to the finished value and may be shared
    between calls.
    """
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    value = memo.get(key)
    if value is not None:
        return value
    rest = mu[1:]
    total = 0
    for rem, sign in strip_removals(lam, mu[0]):
        total += sign * mn_character(rem, rest, memo)
    memo[key] = total
    return total


def _lr_layout(outer: tuple, inner: tuple):
    """Row-major skew cells with neighbour links.

    Returns parallel lists: row of each cell, index of the skew cell to the
    left (or -1), index of the skew cell above (or -1).
    """
    index = {}
    rows, left, up = [], [], []
    for i, row_len in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        for j in range(start, row_len):
            k = len(rows)
            index[(i, j)] = k
            rows.append(i)
            left.append(index.get((i, j - 1), -1))
            up.append(index.get((i - 1, j), -1))
    return rows, left, up


def lr_fillings(outer: tuple, inner: tuple, weight: tuple) -> Iterator[list[int]]:
    """Yield the row-major entry lists of every LR tableau of shape outer/inner.

    Cells are filled left to right, top to bottom, smallest entry first.
    Pruning: semistandard conditions against the left and upper neighbours,
    the content cap ``weight``, and the lattice condition. Because each row
    is weakly increasing, the reverse reading word meets a row's copies of
    v+1 before its copies of v, so the lattice condition for value v+1 in
    row r reads: (#v in rows above r) >= (#(v+1) so far, this row included).
    """
    rows, left, up = _lr_layout(outer, inner)
    ncells = len(rows)
    nvals = len(weight)
    if ncells != sum(weight):
        return
    if ncells == 0:
        yield []
        return
    entry = [0] * ncells
    cnt = [0] * (nvals + 2)
    base: dict[int, list[int]] = {}

    def rec(k):
        if k == ncells:
            yield list(entry)
            return
        r = rows[k]
        if k == 0 or rows[k - 1] != r:
            base[r] = list(cnt)
        above = base[r]
        lo = 1
        if left[k] >= 0:
            lo = entry[left[k]]
        if up[k] >= 0 and entry[up[k]] + 1 > lo:
            lo = entry[up[k]] + 1
        hi = min(nvals, r + 1)
        for w in range(lo, hi + 1):
            if cnt[w] >= weight[w - 1]:
                continue
            if w > 1 and above[w - 1] < cnt[w] + 1:
                continue
            entry[k] = w
            cnt[w] += 1
            yield from rec(k + 1)
            cnt[w] -= 1
        entry[k] = 0

    yield from rec(0)


def lr_count(outer: tuple, inner: tuple, weight: tuple) -> int:
    """Number of LR tableaux of shape outer/inner and content ``weight``."""
    rows, left, up = _lr_layout(outer, inner)
    ncells = len(rows)
    nvals = len(weight)
    if ncells != sum(weight):
        return 0
    if ncells == 0:
        return 1
    entry = [0] * ncells
    cnt = [0] * (nvals + 2)
    base = [None] * (rows[-1] + 1)

    def rec(k):
        if k == ncells:
            return 1
        r = rows[k]
        if k == 0 or rows[k - 1] != r:
            base[r] = cnt[:]
        above = base[r]
        lo = 1
        lk = left[k]
        if lk >= 0:
            lo = entry[lk]
        uk = up[k]
        if uk >= 0 and entry[uk] >= lo:
            lo = entry[uk] + 1
        hi = nvals if nvals < r + 1 else r + 1
        total = 0
        for w in range(lo, hi + 1):
            if cnt[w] >= weight[w - 1]:
                continue
            if w > 1 and above[w - 1] <= cnt[w]:
                continue
            entry[k] = w
            cnt[w] += 1
            total += rec(k + 1)
            cnt[w] -= 1
        return total

    return rec(0)
